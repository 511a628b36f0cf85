#include "socsen/sector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace socsen {

namespace {

// Arc sample bearings for a sector. Both endpoints are included; the step is
// shrunk uniformly so samples divide the arc evenly.
std::vector<double> arc_bearings(const Sector& s, double step_deg) {
    std::vector<double> out;
    if (s.alpha_deg >= 360.0) {
        const int n = std::max(3, static_cast<int>(std::ceil(360.0 / step_deg)));
        out.reserve(n);
        for (int i = 0; i < n; ++i) out.push_back(360.0 * i / n);
        return out;
    }
    const double start = s.dir_deg - 0.5 * s.alpha_deg;
    const int segs = std::max(1, static_cast<int>(std::ceil(s.alpha_deg / step_deg)));
    out.reserve(segs + 1);
    for (int i = 0; i <= segs; ++i) out.push_back(start + s.alpha_deg * i / segs);
    return out;
}

}  // namespace

Polygon sector_polygon(const Sector& s, double step_deg) {
    Polygon poly;
    const auto bearings = arc_bearings(s, step_deg);
    const bool full = s.alpha_deg >= 360.0;
    poly.reserve(bearings.size() + (full ? 0 : 1));
    if (!full) poly.push_back(s.apex);
    for (double b : bearings) poly.push_back(s.apex + s.radius_m * bearing_unit(b));
    return poly;
}

std::vector<Polygon> sector_triangles(const Sector& s, double step_deg) {
    const auto bearings = arc_bearings(s, step_deg);
    std::vector<Polygon> tris;
    const bool full = s.alpha_deg >= 360.0;
    const std::size_t n = bearings.size();
    tris.reserve(n);
    for (std::size_t i = 0; i + 1 < n || (full && i < n); ++i) {
        const double b0 = bearings[i];
        const double b1 = (i + 1 < n) ? bearings[i + 1] : bearings[0];
        tris.push_back({s.apex, s.apex + s.radius_m * bearing_unit(b0),
                        s.apex + s.radius_m * bearing_unit(b1)});
    }
    return tris;
}

double polygon_area(const Polygon& p) {
    if (p.size() < 3) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Vec2& a = p[i];
        const Vec2& b = p[(i + 1) % p.size()];
        acc += cross(a, b);
    }
    return 0.5 * std::abs(acc);
}

Mbr3 polygon_bounds(const Polygon& p) {
    Mbr3 m{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
           std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
           0, 0};
    for (const auto& v : p) {
        m.x_min = std::min(m.x_min, v.x);
        m.x_max = std::max(m.x_max, v.x);
        m.y_min = std::min(m.y_min, v.y);
        m.y_max = std::max(m.y_max, v.y);
    }
    return m;
}

Polygon clip_convex(const Polygon& subject, const Polygon& clip) {
    // Sutherland-Hodgman against each CCW clip edge; "inside" keeps points on
    // the edge itself.
    Polygon out = subject;
    for (std::size_t i = 0; i < clip.size() && !out.empty(); ++i) {
        const Vec2 a = clip[i];
        const Vec2 b = clip[(i + 1) % clip.size()];
        const Vec2 edge = b - a;
        Polygon in;
        in.swap(out);
        for (std::size_t j = 0; j < in.size(); ++j) {
            const Vec2 cur = in[j];
            const Vec2 nxt = in[(j + 1) % in.size()];
            const double dc = cross(edge, cur - a);
            const double dn = cross(edge, nxt - a);
            if (dc >= 0.0) {
                out.push_back(cur);
                if (dn < 0.0) {
                    const double t = dc / (dc - dn);
                    out.push_back(cur + t * (nxt - cur));
                }
            } else if (dn >= 0.0) {
                const double t = dc / (dc - dn);
                out.push_back(cur + t * (nxt - cur));
            }
        }
    }
    return out;
}

namespace {

// Ensures counter-clockwise winding (positive signed area).
Polygon ccw(Polygon p) {
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        acc += cross(p[i], p[(i + 1) % p.size()]);
    if (acc < 0.0) std::reverse(p.begin(), p.end());
    return p;
}

bool axis_separates(const Polygon& a, const Polygon& b, Vec2 axis) {
    double amin = std::numeric_limits<double>::infinity(), amax = -amin;
    double bmin = amin, bmax = -amin;
    for (const auto& v : a) {
        const double d = dot(v, axis);
        amin = std::min(amin, d);
        amax = std::max(amax, d);
    }
    for (const auto& v : b) {
        const double d = dot(v, axis);
        bmin = std::min(bmin, d);
        bmax = std::max(bmax, d);
    }
    return amax < bmin || bmax < amin;
}

}  // namespace

bool convex_intersect(const Polygon& a, const Polygon& b) {
    if (a.empty() || b.empty()) return false;
    for (const Polygon* p : {&a, &b}) {
        for (std::size_t i = 0; i < p->size(); ++i) {
            const Vec2 e = (*p)[(i + 1) % p->size()] - (*p)[i];
            if (e.x == 0.0 && e.y == 0.0) continue;
            if (axis_separates(a, b, Vec2{-e.y, e.x})) return false;
        }
    }
    return true;
}

bool sectors_intersect(const Sector& a, const Sector& b, double step_deg) {
    // Circle prefilter: apexes further apart than the radii sum cannot touch.
    if (dist(a.apex, b.apex) > a.radius_m + b.radius_m) return false;
    const auto ta = sector_triangles(a, step_deg);
    const auto tb = sector_triangles(b, step_deg);
    for (const auto& x : ta)
        for (const auto& y : tb)
            if (convex_intersect(x, y)) return true;
    return false;
}

double sector_intersection_area(const Sector& a, const Sector& b, double step_deg) {
    if (dist(a.apex, b.apex) > a.radius_m + b.radius_m) return 0.0;
    // Fan triangles partition each sector, so intersection areas add up
    // exactly over triangle pairs.
    const auto ta = sector_triangles(a, step_deg);
    const auto tb = sector_triangles(b, step_deg);
    double acc = 0.0;
    for (const auto& x : ta) {
        const Polygon cx = ccw(x);
        for (const auto& y : tb) acc += polygon_area(clip_convex(y, cx));
    }
    return acc;
}

double sector_iou(const Sector& a, const Sector& b, double step_deg) {
    const double ia = sector_intersection_area(a, b, step_deg);
    const double aa = polygon_area(sector_polygon(a, step_deg));
    const double ab = polygon_area(sector_polygon(b, step_deg));
    const double uni = aa + ab - ia;
    if (uni <= 0.0) return 0.0;
    return std::clamp(ia / uni, 0.0, 1.0);
}

bool sector_intersects_box(const Sector& s, const Mbr3& box, double step_deg) {
    const Polygon rect = {{box.x_min, box.y_min},
                          {box.x_max, box.y_min},
                          {box.x_max, box.y_max},
                          {box.x_min, box.y_max}};
    for (const auto& t : sector_triangles(s, step_deg))
        if (convex_intersect(t, rect)) return true;
    return false;
}

}  // namespace socsen
