#pragma once

// Complexity score (1..5) for torus shade construction methods.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace skia {

struct MethodProfile {
    std::string name;
    int steps = 1;
    int extra_drawings = 0; // drawings beyond the base plan+elevation (or single view)
    int angles = 0;         // angle calculations
    bool multiple_projection = false;
    std::optional<int> published_score;
    std::string citation;
    std::string note;
};

struct ComplexityScore {
    int value = 1;
    int drawing_points = 0;
    int angle_points = 0;
    int step_points = 0;
    bool auto_cap = false;
};

inline constexpr int kAutoCapSteps = 30;  // more than this scores 5 outright
inline constexpr int kMaxAnglePoints = 5;
inline constexpr int kStepBonusThreshold = 10;

/// Base drawing set counts one point, each extra drawing one more, each
/// angle calculation one more (at most five), and ten or more steps one
/// more; the sum is clamped to [1, 5]. More than thirty steps is always 5.
ComplexityScore score(const MethodProfile& profile);

/// Reads the profiles CSV (header: name, steps, extra_drawings, angles,
/// multiple_projection, published_score, citation[, note]). Throws
/// ParseError naming the 1-based data row.
std::vector<MethodProfile> read_method_profiles(std::istream& in);

/// The shipped rows followed by the elevation-only method, whose step count
/// is taken from a live construction log.
std::vector<MethodProfile> load_method_profiles(const std::string& path);

MethodProfile proposed_method_profile(int steps);

} // namespace skia
