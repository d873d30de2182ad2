#include "skia/planar.hpp"

#include "skia/error.hpp"

#include <algorithm>
#include <string>

namespace skia {

Vec2 normalized(Vec2 a) {
    const double n = norm(a);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw Error(ErrorCode::DegenerateInput, "cannot normalise a zero or non-finite vector");
    }
    return {a.x / n, a.z / n};
}

Line2::Line2(Point2 anchor, Vec2 direction) : anchor_(anchor), direction_(normalized(direction)) {
    if (!is_finite(anchor)) {
        throw Error(ErrorCode::DegenerateInput, "line anchor is not finite");
    }
}

Circle2 make_circle(Point2 center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius) || !is_finite(center)) {
        throw Error(ErrorCode::DegenerateInput, "circle radius must be positive, got " + std::to_string(radius));
    }
    return {center, radius};
}

double TolerancePolicy::effective(double scene_extent) const {
    return std::max(abs_eps, rel_eps * std::abs(scene_extent));
}

Line2 line_through(Point2 p, Point2 q, double eps) {
    if (distance(p, q) <= eps) {
        throw Error(ErrorCode::DegenerateInput, "line_through needs two distinct points");
    }
    return Line2(p, q - p);
}

Point2 intersect_lines(const Line2& a, const Line2& b, const TolerancePolicy& tol, double scene_extent) {
    const Vec2 da = a.direction();
    const Vec2 db = b.direction();
    const double denom = cross(da, db);
    if (std::abs(denom) <= tol.rel_eps) {
        if (a.distance_to(b.anchor()) <= tol.effective(scene_extent)) {
            throw Error(ErrorCode::CoincidentLines, "lines coincide");
        }
        throw Error(ErrorCode::ParallelLines, "lines are parallel");
    }
    const double t = cross(b.anchor() - a.anchor(), db) / denom;
    return a.at(t);
}

std::vector<Point2> intersect_line_circle(const Line2& l, const Circle2& c) {
    const double t0 = l.parameter_of(c.center);
    const Point2 closest = l.at(t0);
    const Vec2 off = c.center - closest;
    const double r2 = c.radius * c.radius;
    const double h2 = r2 - dot(off, off);
    const double window = 1e-9 * r2;
    if (h2 < -window) {
        return {};
    }
    if (std::abs(h2) <= window) {
        return {closest};
    }
    const double h = std::sqrt(h2);
    return {l.at(t0 - h), l.at(t0 + h)};
}

Point2 reflect_point_across_line(Point2 p, const Line2& axis) {
    const Vec2 w = p - axis.anchor();
    const Vec2 d = axis.direction();
    return axis.anchor() + (2.0 * dot(w, d) * d - w);
}

Vec2 reflect_direction_across_line(Vec2 d, const Line2& axis) {
    const Vec2 a = axis.direction();
    // Re-normalise so repeated mirroring does not drift off the unit circle.
    return normalized(2.0 * dot(d, a) * a - d);
}

Point2 perpendicular_foot(Point2 p, const Line2& l) { return l.at(l.parameter_of(p)); }

} // namespace skia
