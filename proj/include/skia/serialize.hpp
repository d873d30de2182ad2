#pragma once

// Versioned, byte-stable documents: trace JSON, oracle outline JSON,
// comparison CSV/JSON, matrix manifest and calibration ranking.
//
// Coordinates are rounded to 6 decimals (inches); residuals keep full
// precision. Keys are emitted in a fixed order.

#include "skia/compare.hpp"
#include "skia/construction.hpp"
#include "skia/oracle.hpp"
#include "skia/plates.hpp"
#include "skia/rubric.hpp"
#include "skia/shade_path.hpp"

#include <string>
#include <vector>

namespace skia {

inline constexpr const char* kTraceSchema = "skia.trace/1";
inline constexpr const char* kOutlineSchema = "skia.outline/1";
inline constexpr const char* kReportSchema = "skia.report/1";
inline constexpr const char* kManifestSchema = "skia.manifest/1";
inline constexpr const char* kCalibrationSchema = "skia.calibration/1";

/// Round to 6 decimals; -0 becomes 0.
double round6(double v);

/// `config_json` is an already serialised JSON object (the resolved run
/// configuration) or empty.
std::string trace_to_json(const ConstructionTrace& trace, const ShadePath& path,
                          const std::vector<AssertionResidual>& assertions, const std::string& config_json = {});

std::string outline_to_json(const OracleShade& oracle, const std::string& config_json = {});

inline constexpr const char* kReportCsvHeader = "config,variant,reference,hausdorff_in,mean_in,iou,d_dev,e_dev";
std::string reports_to_csv(const std::vector<ComparisonReport>& reports);
std::string reports_to_json(const std::vector<ComparisonReport>& reports, const std::string& config_json = {});

std::string manifest_to_json(const std::string& preset, const std::vector<double>& widths,
                             const std::vector<double>& heights, const MatrixPlate& plate,
                             const std::string& config_json = {});

std::string rankings_to_json(const std::vector<VariantRanking>& rankings, const std::string& config_json = {});

} // namespace skia
