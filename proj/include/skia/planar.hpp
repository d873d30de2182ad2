#pragma once

// Ruler-and-compass kernel for the elevation plane.
//
// Coordinates are inches with x to the right and z upward; the torus centre
// sits at the origin. Directions are always unit vectors, never angles.

#include <cmath>
#include <vector>

namespace skia {

struct Vec2 {
    double x = 0.0;
    double z = 0.0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.z + b.z}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.z - b.z}; }
    friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.z}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.z}; }
    friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.z}; }
    friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.z * b.z; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.z - a.z * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.z); }
/// Counter-clockwise quarter turn.
constexpr Vec2 perp(Vec2 a) { return {-a.z, a.x}; }
Vec2 normalized(Vec2 a);

struct Point2 {
    double x = 0.0;
    double z = 0.0;

    friend constexpr Vec2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.z - b.z}; }
    friend constexpr Point2 operator+(Point2 p, Vec2 v) { return {p.x + v.x, p.z + v.z}; }
    friend constexpr Point2 operator-(Point2 p, Vec2 v) { return {p.x - v.x, p.z - v.z}; }
    /// Point reflection through the origin (the torus centre C).
    friend constexpr Point2 operator-(Point2 p) { return {-p.x, -p.z}; }
    friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.z}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

inline double distance(Point2 a, Point2 b) { return norm(a - b); }
constexpr Point2 midpoint(Point2 a, Point2 b) { return {0.5 * (a.x + b.x), 0.5 * (a.z + b.z)}; }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.z); }

using Polyline = std::vector<Point2>;

/// Infinite line with a unit direction. The direction also orders
/// intersection results.
class Line2 {
public:
    Line2() = default;
    /// Normalises `direction`; throws DegenerateInput for a zero vector.
    Line2(Point2 anchor, Vec2 direction);

    Point2 anchor() const { return anchor_; }
    Vec2 direction() const { return direction_; }
    Point2 at(double t) const { return anchor_ + t * direction_; }
    /// Signed parameter of the orthogonal projection of p.
    double parameter_of(Point2 p) const { return dot(p - anchor_, direction_); }
    double distance_to(Point2 p) const { return std::abs(cross(direction_, p - anchor_)); }

private:
    Point2 anchor_{};
    Vec2 direction_{1.0, 0.0};
};

struct Circle2 {
    Point2 center;
    double radius = 1.0;
};

/// Validated circle constructor (radius must be positive and finite).
Circle2 make_circle(Point2 center, double radius);

struct TolerancePolicy {
    double abs_eps = 1e-12;
    double rel_eps = 1e-9;

    /// max(abs_eps, rel_eps * extent)
    double effective(double scene_extent) const;
};

Line2 line_through(Point2 p, Point2 q, double eps = TolerancePolicy{}.effective(1.0));

Point2 intersect_lines(const Line2& a, const Line2& b,
                       const TolerancePolicy& tol = {}, double scene_extent = 1.0);

/// 0, 1 or 2 points ordered by increasing parameter along `l`. A discriminant
/// within +-1e-9 r^2 is treated as tangency and yields a single point.
std::vector<Point2> intersect_line_circle(const Line2& l, const Circle2& c);

Point2 reflect_point_across_line(Point2 p, const Line2& axis);
Vec2 reflect_direction_across_line(Vec2 d, const Line2& axis);
Point2 perpendicular_foot(Point2 p, const Line2& l);

} // namespace skia
