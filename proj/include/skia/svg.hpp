#pragma once

// Minimal deterministic SVG 1.1 writer. Numbers are printed with three
// decimals so identical input always yields identical bytes.

#include "skia/planar.hpp"

#include <span>
#include <string>
#include <string_view>

namespace skia::svg {

std::string escape(std::string_view text);
std::string num(double v);

/// Inches (z up) to SVG user units (y down).
struct ViewMap {
    double scale = 96.0;
    double origin_x = 0.0; // screen position of x = 0
    double origin_y = 0.0; // screen position of z = 0

    Point2 operator()(Point2 p) const { return {origin_x + scale * p.x, origin_y - scale * p.z}; }
    double length(double inches) const { return scale * inches; }
};

class Document {
public:
    Document(double width, double height);

    void metadata(std::string_view text);
    void title(std::string_view text);
    void open_group(std::string_view attributes);
    void close_group();
    void raw(std::string_view markup);

    void line(Point2 a, Point2 b, std::string_view style);
    void polyline(std::span<const Point2> pts, std::string_view style, bool closed = false);
    void path(std::string_view d, std::string_view style);
    void circle(Point2 c, double r, std::string_view style);
    void rect(double x, double y, double w, double h, std::string_view style);
    void text(Point2 at, std::string_view content, std::string_view attributes);

    double width() const { return width_; }
    double height() const { return height_; }
    std::string str() const;

private:
    void indent();

    double width_;
    double height_;
    std::string body_;
    int depth_ = 1;
};

} // namespace skia::svg
