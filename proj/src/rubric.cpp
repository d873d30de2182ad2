#include "skia/rubric.hpp"

#include "skia/construction.hpp"
#include "skia/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fmt/format.h>
#include <fstream>
#include <istream>

namespace skia {

ComplexityScore score(const MethodProfile& p) {
    ComplexityScore s;
    s.drawing_points = 1 + std::max(0, p.extra_drawings);
    s.angle_points = std::clamp(p.angles, 0, kMaxAnglePoints);
    s.step_points = p.steps >= kStepBonusThreshold ? 1 : 0;
    s.auto_cap = p.steps > kAutoCapSteps;
    s.value = s.auto_cap ? 5 : std::clamp(s.drawing_points + s.angle_points + s.step_points, 1, 5);
    return s;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line, int row) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back().push_back('"');
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back().push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else if (c != '\r') {
            fields.back().push_back(c);
        }
    }
    if (quoted) {
        throw Error(ErrorCode::ParseError, fmt::format("row {}: unterminated quote", row));
    }
    return fields;
}

int parse_int(const std::string& text, const char* column, int row) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (text.empty() || res.ec != std::errc{} || res.ptr != end) {
        throw Error(ErrorCode::ParseError, fmt::format("row {}: column '{}' is not an integer: '{}'", row, column, text));
    }
    if (value < 0) {
        throw Error(ErrorCode::ParseError, fmt::format("row {}: column '{}' must be non-negative", row, column));
    }
    return value;
}

bool parse_bool(std::string text, int row) {
    std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
    if (text == "yes" || text == "true" || text == "1") return true;
    if (text == "no" || text == "false" || text == "0") return false;
    throw Error(ErrorCode::ParseError, fmt::format("row {}: multiple_projection must be yes/no, got '{}'", row, text));
}

} // namespace

std::vector<MethodProfile> read_method_profiles(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(ErrorCode::ParseError, "row 0: missing header");
    }
    const auto header = split_csv_line(line, 0);
    const std::vector<std::string> expected{"name", "steps", "extra_drawings", "angles",
                                            "multiple_projection", "published_score", "citation"};
    if (header.size() < expected.size() || !std::equal(expected.begin(), expected.end(), header.begin())) {
        throw Error(ErrorCode::ParseError, "row 0: unexpected header '" + line + "'");
    }

    std::vector<MethodProfile> out;
    int row = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") {
            continue;
        }
        ++row;
        const auto f = split_csv_line(line, row);
        if (f.size() < 7 || f.size() > 8) {
            throw Error(ErrorCode::ParseError, fmt::format("row {}: expected 7 or 8 fields, got {}", row, f.size()));
        }
        MethodProfile p;
        p.name = f[0];
        if (p.name.empty()) {
            throw Error(ErrorCode::ParseError, fmt::format("row {}: empty name", row));
        }
        p.steps = parse_int(f[1], "steps", row);
        if (p.steps < 1) {
            throw Error(ErrorCode::ParseError, fmt::format("row {}: steps must be >= 1", row));
        }
        p.extra_drawings = parse_int(f[2], "extra_drawings", row);
        p.angles = parse_int(f[3], "angles", row);
        p.multiple_projection = parse_bool(f[4], row);
        if (!f[5].empty()) {
            p.published_score = parse_int(f[5], "published_score", row);
        }
        p.citation = f[6];
        if (f.size() == 8) {
            p.note = f[7];
        }
        out.push_back(std::move(p));
    }
    return out;
}

MethodProfile proposed_method_profile(int steps) {
    MethodProfile p;
    p.name = "Elevation-only torus shade construction";
    p.steps = steps;
    p.extra_drawings = 0;
    p.angles = 0;
    p.multiple_projection = false;
    p.published_score = 2;
    p.citation = "this repository";
    return p;
}

std::vector<MethodProfile> load_method_profiles(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open profiles file " + path);
    }
    auto rows = read_method_profiles(in);
    const auto trace = run_construction(TorusElevationSpec(6.0, 2.0));
    rows.push_back(proposed_method_profile(static_cast<int>(trace.steps.size())));
    return rows;
}

} // namespace skia
