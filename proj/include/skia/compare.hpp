#pragma once

// Agreement metrics between the constructed shade path and the oracle curves.

#include "skia/construction.hpp"
#include "skia/oracle.hpp"
#include "skia/planar.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skia {

/// Subdivides every segment so none is longer than max_segment (strictly).
Polyline densify(const Polyline& curve, double max_segment);

struct CurveDistances {
    double hausdorff = 0.0;
    /// Mean of the two directed mean nearest-vertex distances.
    double mean = 0.0;
};

/// Vertex-sampled distances; both inputs need at least 3 vertices and should
/// already be densified. Parallel over the vertices of each curve.
CurveDistances curve_distances(const Polyline& a, const Polyline& b);
double hausdorff(const Polyline& a, const Polyline& b);

enum class ReferenceKind { OuterLoop, InnerLoop, RegionOutline };
inline constexpr std::array<ReferenceKind, 3> kAllReferences{
    ReferenceKind::OuterLoop, ReferenceKind::InnerLoop, ReferenceKind::RegionOutline};
std::string_view to_string(ReferenceKind kind);
std::optional<ReferenceKind> parse_reference(std::string_view name);

struct IouResult {
    std::optional<double> value; // empty when either loop is not simple
    std::string method;
};

/// Area(intersection)/area(union) by scanline rasterisation over the joint
/// bounding box, `resolution` pixels on its long side.
IouResult region_iou(const Polyline& a, const Polyline& b, int resolution = 1024);

struct ComparisonReport {
    std::string config_id;
    double width = 0.0;
    double height = 0.0;
    InterpretationVariant variant;
    ReferenceKind reference = ReferenceKind::OuterLoop;
    double hausdorff = 0.0;
    double mean = 0.0;
    std::optional<double> iou;
    std::string iou_method;
    double d_dev = 0.0;
    double e_dev = 0.0;
};

struct CompareOptions {
    int resolution = kDefaultResolution;
    int path_samples = 2048;
    int loop_samples = 2048;
    int iou_resolution = 1024;
};

/// "6x2", "12.5x3"
std::string config_id(const TorusElevationSpec& spec);

std::vector<ComparisonReport> compare_config(const TorusElevationSpec& spec, InterpretationVariant variant,
                                             std::span<const ReferenceKind> references, const OracleShade& oracle,
                                             const CompareOptions& options = {});

/// Computes the oracle for `spec` itself.
std::vector<ComparisonReport> compare_config(const TorusElevationSpec& spec, InterpretationVariant variant,
                                             std::span<const ReferenceKind> references,
                                             const CompareOptions& options = {});

struct RankedVariant {
    InterpretationVariant variant;
    double median_hausdorff = 0.0;
};

struct VariantRanking {
    ReferenceKind reference;
    std::vector<RankedVariant> ranking; // best first
};

/// Median Hausdorff per variant and reference kind, sorted ascending with
/// ties broken by variant ordinal.
std::vector<VariantRanking> rank_variants(std::span<const ComparisonReport> reports,
                                          std::span<const InterpretationVariant> variants,
                                          std::span<const ReferenceKind> references);

std::vector<VariantRanking> calibrate_variants(std::span<const TorusElevationSpec> configs,
                                               std::span<const InterpretationVariant> variants,
                                               std::span<const ReferenceKind> references = kAllReferences,
                                               const CompareOptions& options = {});

} // namespace skia
