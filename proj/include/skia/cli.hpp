#pragma once

// Command line front-end: construct | matrix | compare | score.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace skia::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 2;
inline constexpr int kExitInternal = 3;

/// Fully resolved settings of one invocation. Precedence: command-line
/// flags, then the --config file, then SKIA_OUT_DIR (output root only),
/// then the defaults below.
struct RunConfig {
    std::string subcommand;
    double width = 6.0;
    double height = 2.0;
    std::string preset;  // fig4 | fig5 | full
    std::string widths;  // "20:12" or "20,19,18"
    std::string heights; // "6:1"
    std::string variants = "canonical"; // canonical | all | comma list of variant names
    std::string references = "all";     // all | comma list
    int resolution = 1024;
    int samples = 2048;
    std::string out_dir = "skia_out";
    bool svg = true;
    bool calibrate = false;
    bool export_mask = false;
    double scale = 96.0;
    double page_width = 7.0;
    double page_height = 9.0;
    std::string profiles;
};

/// Applies `key = value` lines (TOML-compatible subset: bare numbers,
/// booleans, double-quoted strings, # comments). Throws skia::Error
/// (InvalidArgument) on unknown keys or bad values.
void apply_config_text(RunConfig& config, std::string_view text);

/// Stable JSON object of everything that affects output content (the
/// output directory is left out so relocated runs stay byte-identical).
std::string config_to_json(const RunConfig& config);

/// "20:12" (inclusive, either direction, step 1) or "20,19,18".
std::vector<double> parse_range(std::string_view text);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace skia::cli
