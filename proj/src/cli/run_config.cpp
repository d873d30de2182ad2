#include "skia/cli.hpp"

#include "skia/error.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <json.hpp>
#include <sstream>

namespace skia::cli {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& key, const std::string& v) {
    double out = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || res.ec != std::errc{} || res.ptr != v.data() + v.size() || !std::isfinite(out)) {
        throw Error(ErrorCode::InvalidArgument, fmt::format("config key '{}' expects a number, got '{}'", key, v));
    }
    return out;
}

int to_int(const std::string& key, const std::string& v) {
    const double d = to_double(key, v);
    if (d != std::floor(d)) {
        throw Error(ErrorCode::InvalidArgument, fmt::format("config key '{}' expects an integer, got '{}'", key, v));
    }
    return static_cast<int>(d);
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw Error(ErrorCode::InvalidArgument, fmt::format("config key '{}' expects true/false, got '{}'", key, v));
}

} // namespace

void apply_config_text(RunConfig& c, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // '#' starts a comment unless it sits inside a quoted string
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') {
                quoted = !quoted;
            } else if (line[i] == '#' && !quoted) {
                line.resize(i);
                break;
            }
        }
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '[') {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::InvalidArgument, fmt::format("config line {}: expected key = value", lineno));
        }
        const std::string key = trim(std::string_view(stripped).substr(0, eq));
        std::string value = trim(std::string_view(stripped).substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }

        if (key == "width") c.width = to_double(key, value);
        else if (key == "height") c.height = to_double(key, value);
        else if (key == "preset") c.preset = value;
        else if (key == "widths") c.widths = value;
        else if (key == "heights") c.heights = value;
        else if (key == "variants" || key == "variant") c.variants = value;
        else if (key == "references") c.references = value;
        else if (key == "resolution") c.resolution = to_int(key, value);
        else if (key == "samples") c.samples = to_int(key, value);
        else if (key == "out_dir") c.out_dir = value;
        else if (key == "svg") c.svg = to_bool(key, value);
        else if (key == "calibrate") c.calibrate = to_bool(key, value);
        else if (key == "export_mask") c.export_mask = to_bool(key, value);
        else if (key == "scale") c.scale = to_double(key, value);
        else if (key == "page_width") c.page_width = to_double(key, value);
        else if (key == "page_height") c.page_height = to_double(key, value);
        else if (key == "profiles") c.profiles = value;
        else {
            throw Error(ErrorCode::InvalidArgument, fmt::format("config line {}: unknown key '{}'", lineno, key));
        }
    }
}

std::string config_to_json(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["subcommand"] = c.subcommand;
    j["width"] = c.width;
    j["height"] = c.height;
    j["preset"] = c.preset;
    j["widths"] = c.widths;
    j["heights"] = c.heights;
    j["variants"] = c.variants;
    j["references"] = c.references;
    j["resolution"] = c.resolution;
    j["samples"] = c.samples;
    j["svg"] = c.svg;
    j["calibrate"] = c.calibrate;
    j["export_mask"] = c.export_mask;
    j["scale"] = c.scale;
    j["page_width"] = c.page_width;
    j["page_height"] = c.page_height;
    j["profiles"] = c.profiles;
    return j.dump();
}

std::vector<double> parse_range(std::string_view text) {
    const std::string t = trim(text);
    if (t.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty range");
    }
    std::vector<double> out;
    const auto colon = t.find(':');
    if (colon != std::string::npos) {
        const double a = to_double("range", trim(std::string_view(t).substr(0, colon)));
        const double b = to_double("range", trim(std::string_view(t).substr(colon + 1)));
        const double step = a <= b ? 1.0 : -1.0;
        for (double v = a; step > 0 ? v <= b + 1e-9 : v >= b - 1e-9; v += step) {
            out.push_back(v);
        }
    } else {
        std::string item;
        std::istringstream in(t);
        while (std::getline(in, item, ',')) {
            const std::string s = trim(item);
            if (!s.empty()) {
                out.push_back(to_double("range", s));
            }
        }
    }
    if (out.empty()) {
        throw Error(ErrorCode::InvalidArgument, fmt::format("range '{}' is empty", t));
    }
    return out;
}

} // namespace skia::cli
