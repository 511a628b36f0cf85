#pragma once

#include <vector>

#include "socsen/geo.hpp"

namespace socsen {

using Polygon = std::vector<Vec2>;

/// Arc step used to discretize coverage sectors, degrees.
inline constexpr double kArcStepDeg = 5.0;

/// Directed viewing sector in projected coordinates.
struct Sector {
    Vec2 apex;
    double radius_m{0};
    double dir_deg{0};    // bearing of the central ray, [0,360)
    double alpha_deg{0};  // angular extent, (0,360]
};

/// Unit vector of a compass bearing (north = +y, east = +x).
inline Vec2 bearing_unit(double deg) {
    const double r = deg2rad(deg);
    return {std::sin(r), std::cos(r)};
}

/// Discretized sector outline. Sectors narrower than a full turn are fans
/// apex + arc; a full turn (alpha >= 360) is a 72-gon anchored at bearing 0
/// so the cardinal extremes are always hit exactly.
Polygon sector_polygon(const Sector& s, double step_deg = kArcStepDeg);

/// Fan triangles covering sector_polygon(s) exactly; used for the convex
/// pairwise intersection routines below.
std::vector<Polygon> sector_triangles(const Sector& s, double step_deg = kArcStepDeg);

double polygon_area(const Polygon& p);

/// Axis-aligned bounds of a polygon (t axis left degenerate at 0).
Mbr3 polygon_bounds(const Polygon& p);

/// Convex polygon intersection (Sutherland-Hodgman). `clip` must be convex
/// and counter-clockwise; `subject` must be convex.
Polygon clip_convex(const Polygon& subject, const Polygon& clip);

/// Closed-set intersection test for two convex polygons (boundary touch
/// counts), separating-axis based.
bool convex_intersect(const Polygon& a, const Polygon& b);

/// Whether two coverage sectors intersect (boundary touch counts).
bool sectors_intersect(const Sector& a, const Sector& b, double step_deg = kArcStepDeg);

/// Area of the intersection of two sectors at the given discretization.
double sector_intersection_area(const Sector& a, const Sector& b, double step_deg = kArcStepDeg);

/// Intersection-over-union of the two sector footprints.
double sector_iou(const Sector& a, const Sector& b, double step_deg = kArcStepDeg);

/// Whether a sector footprint intersects an axis-aligned box (x/y plane of
/// the Mbr3; the caller checks the time axis separately).
bool sector_intersects_box(const Sector& s, const Mbr3& box, double step_deg = kArcStepDeg);

}  // namespace socsen
