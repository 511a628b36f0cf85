#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace socsen {

/// Meters-per-degree constants of the local equirectangular projection.
/// Fixed values so that projected coordinates are reproducible bit-for-bit.
inline constexpr double kMetersPerDegLon = 111320.0;
inline constexpr double kMetersPerDegLat = 110540.0;

constexpr double deg2rad(double d) { return d * 3.141592653589793238462643383279502884 / 180.0; }
constexpr double rad2deg(double r) { return r * 180.0 / 3.141592653589793238462643383279502884; }

/// WGS84 position, decimal degrees.
struct GeoPoint {
    double lon{0.0};
    double lat{0.0};

    bool valid() const {
        return lon >= -180.0 && lon <= 180.0 && lat >= -90.0 && lat <= 90.0;
    }
};

/// Projected position in meters relative to a corpus origin.
struct Vec2 {
    double x{0.0};
    double y{0.0};
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::sqrt(dot(v, v)); }

/// Local equirectangular projection about `origin`.
/// x grows east, y grows north.
inline Vec2 project(GeoPoint p, GeoPoint origin) {
    return {(p.lon - origin.lon) * std::cos(deg2rad(origin.lat)) * kMetersPerDegLon,
            (p.lat - origin.lat) * kMetersPerDegLat};
}

/// Inverse of project(). Exact up to floating-point rounding for the
/// city-scale displacements this engine deals with.
inline GeoPoint unproject(Vec2 v, GeoPoint origin) {
    return {origin.lon + v.x / (std::cos(deg2rad(origin.lat)) * kMetersPerDegLon),
            origin.lat + v.y / kMetersPerDegLat};
}

inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

/// UTC time interval, seconds resolution. A point timestamp has t_s == t_e.
struct TimeInterval {
    std::int64_t t_s{0};
    std::int64_t t_e{0};

    bool valid() const { return t_s <= t_e; }
    std::int64_t length() const { return t_e - t_s; }
    double midpoint() const { return 0.5 * (static_cast<double>(t_s) + static_cast<double>(t_e)); }
};

inline bool operator==(const TimeInterval& a, const TimeInterval& b) {
    return a.t_s == b.t_s && a.t_e == b.t_e;
}

/// Temporal distance: euclidean over the (t_s, t_e) endpoint pairs.
/// For point timestamps this degenerates to sqrt(2)*|dt|.
inline double dist_t(const TimeInterval& a, const TimeInterval& b) {
    const double ds = static_cast<double>(a.t_s) - static_cast<double>(b.t_s);
    const double de = static_cast<double>(a.t_e) - static_cast<double>(b.t_e);
    return std::sqrt(ds * ds + de * de);
}

/// Compass quadrants of the 4-quadrant directional model.
enum class Quadrant : std::uint8_t { NE, SE, SW, NW };

/// Half-open bins: [0,90) NE, [90,180) SE, [180,270) SW, [270,360) NW.
inline Quadrant quadrant(double dir_deg) {
    if (dir_deg < 90.0) return Quadrant::NE;
    if (dir_deg < 180.0) return Quadrant::SE;
    if (dir_deg < 270.0) return Quadrant::SW;
    return Quadrant::NW;
}

inline const char* quadrant_name(Quadrant q) {
    switch (q) {
        case Quadrant::NE: return "NE";
        case Quadrant::SE: return "SE";
        case Quadrant::SW: return "SW";
        case Quadrant::NW: return "NW";
    }
    return "?";
}

/// Normalize a compass bearing into [0, 360).
inline double normalize_bearing(double deg) {
    double d = std::fmod(deg, 360.0);
    if (d < 0.0) d += 360.0;
    if (d >= 360.0) d = 0.0;
    return d;
}

/// Axis-aligned box in (x meters, y meters, t seconds).
struct Mbr3 {
    double x_min{0}, x_max{0};
    double y_min{0}, y_max{0};
    double t_min{0}, t_max{0};

    bool valid() const { return x_min <= x_max && y_min <= y_max && t_min <= t_max; }

    /// Closed-interval intersection on all three axes: boundary touch counts.
    bool intersects(const Mbr3& o) const {
        return x_min <= o.x_max && o.x_min <= x_max &&
               y_min <= o.y_max && o.y_min <= y_max &&
               t_min <= o.t_max && o.t_min <= t_max;
    }

    bool contains(const Mbr3& o) const {
        return x_min <= o.x_min && o.x_max <= x_max &&
               y_min <= o.y_min && o.y_max <= y_max &&
               t_min <= o.t_min && o.t_max <= t_max;
    }

    Mbr3 merged(const Mbr3& o) const {
        return {std::min(x_min, o.x_min), std::max(x_max, o.x_max),
                std::min(y_min, o.y_min), std::max(y_max, o.y_max),
                std::min(t_min, o.t_min), std::max(t_max, o.t_max)};
    }

    /// Volume used by the R-tree split/choose heuristics only; query results
    /// never depend on it.
    double volume() const { return (x_max - x_min) * (y_max - y_min) * (t_max - t_min); }
};

}  // namespace socsen
