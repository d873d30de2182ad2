#pragma once

// Elevation-only shade construction for a torus with a vertical axis under
// the conventional 45 degree light. Every named point is produced by the
// planar kernel, one logged step at a time.

#include "skia/planar.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skia {

struct Radii {
    double major = 0.0; // R
    double minor = 0.0; // r
};

/// R and r from the drawn outline: r = H/2, R = W/2 - r.
Radii derive_radii(double width, double height);

/// Outline extents of the torus in elevation (inches).
class TorusElevationSpec {
public:
    /// Throws NonPositiveDimension or SpindleNotSupported.
    TorusElevationSpec(double width, double height);

    double width() const { return width_; }
    double height() const { return height_; }
    double major() const { return radii_.major; }
    double minor() const { return radii_.minor; }
    bool is_horn() const { return radii_.major == radii_.minor; }
    /// Scene extent used to scale tolerances.
    double extent() const { return width_; }

private:
    double width_;
    double height_;
    Radii radii_;
};

enum class HRule { VerticalChord, RingTangent };
enum class LmRule { OrthogonalFoot, VerticalMeet };
enum class RingPick { ForwardRay, Nearest };

/// One reading of the ambiguous steps of the construction.
struct InterpretationVariant {
    HRule h_rule = HRule::VerticalChord;
    LmRule lm_rule = LmRule::OrthogonalFoot;
    RingPick ring_pick = RingPick::ForwardRay;

    static constexpr InterpretationVariant canonical() { return {}; }
    /// All eight variants in enum order (canonical first).
    static std::array<InterpretationVariant, 8> all();
    /// Position within all(); used for deterministic tie-breaks.
    std::size_t ordinal() const;
    bool is_canonical() const { return *this == canonical(); }
    /// e.g. "vertical_chord+orthogonal_foot+forward_ray"
    std::string name() const;
    static std::optional<InterpretationVariant> parse(std::string_view name);

    friend constexpr bool operator==(InterpretationVariant, InterpretationVariant) = default;
};

std::string_view to_string(HRule);
std::string_view to_string(LmRule);
std::string_view to_string(RingPick);

enum class Label : std::size_t {
    A, B, C, D, E, P, Q, H, I, J, K, L, M, n, o, n1, o1, n2, o2, // n1 = n', n2 = n''
    Count
};
inline constexpr std::size_t kLabelCount = static_cast<std::size_t>(Label::Count);
/// Drawing name of the label ("n'" for n1, "o''" for o2).
std::string_view label_name(Label);
std::array<Label, kLabelCount> all_labels();

enum class LineId : std::size_t { AB, DE, HP, IQ, LM, HI, PD, QE, Pn, Pn1, Pn2, Qo, Qo1, Qo2, Count };
inline constexpr std::size_t kLineCount = static_cast<std::size_t>(LineId::Count);
std::string_view line_name(LineId);

/// The labelled pairs that are point reflections of each other through C.
inline constexpr std::array<std::pair<Label, Label>, 8> kSymmetricPairs{{
    {Label::D, Label::E}, {Label::P, Label::Q}, {Label::H, Label::I}, {Label::J, Label::K},
    {Label::L, Label::M}, {Label::n, Label::o}, {Label::n1, Label::o1}, {Label::n2, Label::o2},
}};

/// Cyclic order in which the shade path visits the labelled points.
inline constexpr std::array<Label, 10> kShadeCycle{
    Label::P, Label::D, Label::n2, Label::H, Label::M, Label::Q, Label::E, Label::o2, Label::I, Label::L,
};

struct StepRecord {
    int index = 0;
    std::string op;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
};

inline constexpr int kCanonicalStepCount = 15;

struct ConstructionTrace {
    TorusElevationSpec spec;
    InterpretationVariant variant;
    std::array<Point2, kLabelCount> points{};
    std::array<Line2, kLineCount> lines{};
    std::vector<StepRecord> steps;

    Point2 at(Label l) const { return points[static_cast<std::size_t>(l)]; }
    Point2& at(Label l) { return points[static_cast<std::size_t>(l)]; }
    const Line2& line(LineId id) const { return lines[static_cast<std::size_t>(id)]; }
    Line2& line(LineId id) { return lines[static_cast<std::size_t>(id)]; }
    Circle2 left_ring() const;
    Circle2 right_ring() const;
};

/// Runs the construction. Throws InternalInconsistency when one of the
/// drawn incidences (C on DE, HP parallel to IQ, n on HD for the vertical
/// chord reading) does not hold within tolerance.
ConstructionTrace run_construction(const TorusElevationSpec& spec,
                                   InterpretationVariant variant = InterpretationVariant::canonical(),
                                   const TolerancePolicy& tol = {});

struct AssertionResidual {
    std::string id;
    double residual = 0.0;
};

std::vector<AssertionResidual> validate_trace(const ConstructionTrace& trace);

} // namespace skia
