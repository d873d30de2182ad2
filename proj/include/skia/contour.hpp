#pragma once

// Binary rasters, marching-squares contours and small polygon utilities.

#include "skia/planar.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace skia {

/// Row-major grid of pixel-centre samples; row 0 is the lowest z.
struct BinaryGrid {
    int cols = 0;
    int rows = 0;
    double x0 = 0.0; // left edge of column 0
    double z0 = 0.0; // bottom edge of row 0
    double pixel = 1.0;
    std::vector<std::uint8_t> inside;

    bool at(int col, int row) const {
        if (col < 0 || row < 0 || col >= cols || row >= rows) {
            return false;
        }
        return inside[static_cast<std::size_t>(row) * cols + col] != 0;
    }
    Point2 center(int col, int row) const { return {x0 + (col + 0.5) * pixel, z0 + (row + 0.5) * pixel}; }
};

/// Closed, counter-clockwise outer contours (clockwise holes) of the inside
/// set, thresholded halfway between pixel centres. Saddles join the inside
/// diagonal. Cells beyond the grid count as outside, so every contour closes.
std::vector<Polyline> marching_squares(const BinaryGrid& grid);

/// Shoelace area; positive for counter-clockwise loops. A repeated closing
/// vertex is harmless.
double signed_area(std::span<const Point2> loop);

/// Even-odd rule.
bool point_in_polygon(std::span<const Point2> loop, Point2 p);

/// True when no two non-adjacent edges of the closed loop touch.
bool is_simple_closed(std::span<const Point2> loop);

} // namespace skia
