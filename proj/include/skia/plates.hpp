#pragma once

// SVG plates: the labelled construction, the dimension matrices and the
// construction-versus-oracle overlays.

#include "skia/compare.hpp"
#include "skia/construction.hpp"
#include "skia/oracle.hpp"
#include "skia/shade_path.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skia {

struct PlateStyle {
    double scale = 96.0; // SVG user units per inch
    double margin = 0.75; // inches around the drawing
    double outline_stroke = 1.0;
    double construction_stroke = 0.5;
    double path_stroke = 1.5;
    std::string shade_fill = "#808080";
    double label_size = 12.0;
    std::string construction_color = "#000000";
    std::string oracle_outer_color = "#c0392b";
    std::string oracle_inner_color = "#2471a3";
    std::string oracle_region_color = "#1e8449";
    double page_width = 7.0;  // inches, matrix plates
    double page_height = 9.0;
};

/// Labelled construction: outline, rings, construction lines, the 19 named
/// points and the shade path with its shade side filled.
std::string plate_construction(const ConstructionTrace& trace, const ShadePath& path, const PlateStyle& style = {},
                               const std::string& metadata = {});

struct MatrixCell {
    double width = 0.0;
    double height = 0.0;
    bool constructed = false;
    std::string skip_reason; // ErrorCode name when not constructed
    double major = 0.0;
    double minor = 0.0;
};

struct MatrixPlate {
    std::string svg;
    std::vector<MatrixCell> cells; // row-major: heights outer, widths inner
    double scale = 1.0;            // uniform page-fit factor
};

/// Grid of shade paths; widths run left to right and heights top to bottom
/// in the order given. Invalid cells are drawn as skipped, never fatal.
MatrixPlate plate_matrix(const std::vector<double>& widths, const std::vector<double>& heights,
                         const PlateStyle& style = {}, const std::string& metadata = {});

std::string plate_overlay(const ConstructionTrace& trace, const ShadePath& path, const OracleShade& oracle,
                          const std::vector<ComparisonReport>& reports, const PlateStyle& style = {},
                          const std::string& metadata = {});

} // namespace skia
