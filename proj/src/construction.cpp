#include "skia/construction.hpp"

#include "skia/error.hpp"

#include <cmath>
#include <fmt/format.h>

namespace skia {

namespace {

constexpr std::array<std::string_view, kLabelCount> kLabelNames{
    "A", "B", "C", "D", "E", "P", "Q", "H", "I", "J", "K", "L", "M", "n", "o", "n'", "o'", "n''", "o''",
};

constexpr std::array<std::string_view, kLineCount> kLineNames{
    "AB", "DE", "HP", "IQ", "LM", "HI", "PD", "QE", "Pn", "Pn'", "Pn''", "Qo", "Qo'", "Qo''",
};

const Vec2 kUp{0.0, 1.0};
const Vec2 kDiagonal{1.0, 1.0}; // 45 degree line through a ring centre

void require(bool ok, const char* what, double residual) {
    if (!ok) {
        throw Error(ErrorCode::InternalInconsistency, fmt::format("{} (residual {:.3e})", what, residual));
    }
}

} // namespace

Radii derive_radii(double width, double height) {
    if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) || !std::isfinite(height)) {
        throw Error(ErrorCode::NonPositiveDimension,
                    fmt::format("width and height must be positive (got W={}, H={})", width, height));
    }
    if (width < 2.0 * height) {
        throw Error(ErrorCode::SpindleNotSupported,
                    fmt::format("W >= 2H is required (ring or horn torus); got W={} < 2H={}", width, 2.0 * height));
    }
    const double r = 0.5 * height;
    return {0.5 * width - r, r};
}

TorusElevationSpec::TorusElevationSpec(double width, double height)
    : width_(width), height_(height), radii_(derive_radii(width, height)) {}

std::array<InterpretationVariant, 8> InterpretationVariant::all() {
    std::array<InterpretationVariant, 8> out{};
    std::size_t i = 0;
    for (HRule h : {HRule::VerticalChord, HRule::RingTangent}) {
        for (LmRule lm : {LmRule::OrthogonalFoot, LmRule::VerticalMeet}) {
            for (RingPick pick : {RingPick::ForwardRay, RingPick::Nearest}) {
                out[i++] = {h, lm, pick};
            }
        }
    }
    return out;
}

std::size_t InterpretationVariant::ordinal() const {
    return static_cast<std::size_t>(h_rule) * 4 + static_cast<std::size_t>(lm_rule) * 2 +
           static_cast<std::size_t>(ring_pick);
}

std::string_view to_string(HRule r) { return r == HRule::VerticalChord ? "vertical_chord" : "ring_tangent"; }
std::string_view to_string(LmRule r) { return r == LmRule::OrthogonalFoot ? "orthogonal_foot" : "vertical_meet"; }
std::string_view to_string(RingPick r) { return r == RingPick::ForwardRay ? "forward_ray" : "nearest"; }

std::string InterpretationVariant::name() const {
    return fmt::format("{}+{}+{}", to_string(h_rule), to_string(lm_rule), to_string(ring_pick));
}

std::optional<InterpretationVariant> InterpretationVariant::parse(std::string_view name) {
    if (name == "canonical") {
        return canonical();
    }
    for (const auto& v : all()) {
        if (v.name() == name) {
            return v;
        }
    }
    return std::nullopt;
}

std::string_view label_name(Label l) { return kLabelNames.at(static_cast<std::size_t>(l)); }

std::array<Label, kLabelCount> all_labels() {
    std::array<Label, kLabelCount> out{};
    for (std::size_t i = 0; i < kLabelCount; ++i) {
        out[i] = static_cast<Label>(i);
    }
    return out;
}

std::string_view line_name(LineId id) { return kLineNames.at(static_cast<std::size_t>(id)); }

Circle2 ConstructionTrace::left_ring() const { return make_circle(at(Label::P), spec.minor()); }
Circle2 ConstructionTrace::right_ring() const { return make_circle(at(Label::Q), spec.minor()); }

// The right-hand half of the figure is produced by feeding the same
// primitives the point-reflected inputs (negated anchors and directions).
// Negation is exact in IEEE arithmetic, so the two halves come out as exact
// mirror images and the symmetry residuals are zero.
ConstructionTrace run_construction(const TorusElevationSpec& spec, InterpretationVariant variant,
                                   const TolerancePolicy& tol) {
    const double R = spec.major();
    const double r = spec.minor();
    const double eps = tol.effective(spec.extent());

    ConstructionTrace t{spec, variant, {}, {}, {}};
    auto log = [&t](std::string op, std::vector<std::string> in, std::vector<std::string> out) {
        t.steps.push_back({static_cast<int>(t.steps.size()) + 1, std::move(op), std::move(in), std::move(out)});
    };

    // 1. central line through the ring centres
    const Point2 A{-(R + r), 0.0};
    const Point2 B = -A;
    t.at(Label::A) = A;
    t.at(Label::B) = B;
    t.line(LineId::AB) = line_through(A, B, eps);
    log("line_through", {"A", "B"}, {"AB"});

    // 2. ring centres on AB
    const Point2 P{-R, 0.0};
    const Point2 Q = -P;
    t.at(Label::P) = P;
    t.at(Label::Q) = Q;
    log("mark_ring_centres", {"AB"}, {"P", "Q"});
    const Circle2 left = make_circle(P, r);
    const Circle2 right = make_circle(Q, r);

    // 3-4. 45 degree lines from the ring centres: D lowest on the left ring,
    // E highest on the right ring.
    const Line2 PD = Line2(P, kDiagonal);
    const Line2 QE = Line2(Q, -kDiagonal);
    const Point2 D = intersect_line_circle(PD, left).front();
    log("intersect_line_circle", {"P", "ring(P)"}, {"D"});
    const Point2 E = intersect_line_circle(QE, right).front();
    log("intersect_line_circle", {"Q", "ring(Q)"}, {"E"});
    t.at(Label::D) = D;
    t.at(Label::E) = E;
    t.line(LineId::PD) = line_through(P, D, eps);
    t.line(LineId::QE) = line_through(Q, E, eps);

    // 5. DE bisects AB at C
    const Line2 DE = line_through(D, E, eps);
    const Line2 ED = line_through(E, D, eps);
    const Point2 C = midpoint(A, B);
    t.at(Label::C) = C;
    t.line(LineId::DE) = DE;
    require(DE.distance_to(C) <= eps, "line DE does not pass through C", DE.distance_to(C));
    log("line_through", {"D", "E"}, {"DE", "C"});

    // 6-7. H and I
    auto construct_h = [&](Point2 centre, Point2 d_point, const Circle2& ring, Vec2 up) -> Point2 {
        if (variant.h_rule == HRule::VerticalChord) {
            const auto hits = intersect_line_circle(Line2(d_point, up), ring);
            return hits.back();
        }
        // ring point whose radius is a quarter turn from the radius to D
        return centre + r * perp(normalized(d_point - centre));
    };
    const Point2 H = construct_h(P, D, left, kUp);
    log(variant.h_rule == HRule::VerticalChord ? "intersect_line_circle" : "rotate_radius", {"D", "ring(P)"}, {"H"});
    const Point2 I = construct_h(Q, E, right, -kUp);
    log(variant.h_rule == HRule::VerticalChord ? "intersect_line_circle" : "rotate_radius", {"E", "ring(Q)"}, {"I"});
    t.at(Label::H) = H;
    t.at(Label::I) = I;
    t.line(LineId::HI) = line_through(H, I, eps);

    // 8-9. J = HP x DE, K = IQ x DE
    const Line2 HP = line_through(H, P, eps);
    const Line2 IQ = line_through(I, Q, eps);
    t.line(LineId::HP) = HP;
    t.line(LineId::IQ) = IQ;
    const Point2 J = intersect_lines(HP, DE, tol, spec.extent());
    log("intersect_lines", {"HP", "DE"}, {"J"});
    const Point2 K = intersect_lines(IQ, ED, tol, spec.extent());
    log("intersect_lines", {"IQ", "DE"}, {"K"});
    t.at(Label::J) = J;
    t.at(Label::K) = K;

    // 10. LM through C, parallel to HP and IQ
    const double hp_iq = std::abs(cross(HP.direction(), IQ.direction()));
    require(hp_iq <= tol.rel_eps, "HP and IQ are not parallel", hp_iq);
    const Line2 LM(C, HP.direction());
    const Line2 ML(C, -HP.direction());
    t.line(LineId::LM) = LM;
    log("parallel_through", {"C", "HP"}, {"LM"});

    // 11. L from J, M from K
    Point2 L{};
    Point2 M{};
    if (variant.lm_rule == LmRule::OrthogonalFoot) {
        L = perpendicular_foot(J, LM);
        M = perpendicular_foot(K, ML);
        log("perpendicular_foot", {"J", "K", "LM"}, {"L", "M"});
    } else {
        L = intersect_lines(Line2(J, kUp), LM, tol, spec.extent());
        M = intersect_lines(Line2(K, -kUp), ML, tol, spec.extent());
        log("intersect_lines", {"J", "K", "LM"}, {"L", "M"});
    }
    t.at(Label::L) = L;
    t.at(Label::M) = M;

    // 12. n', o' on the outer edge tangents
    const Point2 n1 = perpendicular_foot(D, Line2(A, kUp));
    const Point2 o1 = perpendicular_foot(E, Line2(B, -kUp));
    t.at(Label::n1) = n1;
    t.at(Label::o1) = o1;
    log("perpendicular_foot", {"D", "E", "outer edges"}, {"n'", "o'"});

    // 13. n, o mirror n', o' in PD, QE
    const Point2 n = reflect_point_across_line(n1, PD);
    const Point2 o = reflect_point_across_line(o1, QE);
    t.at(Label::n) = n;
    t.at(Label::o) = o;
    log("reflect_point_across_line", {"n'", "o'", "PD", "QE"}, {"n", "o"});
    if (variant.h_rule == HRule::VerticalChord) {
        const double off = line_through(H, D, eps).distance_to(n);
        require(off <= eps, "n does not lie on HD extended", off);
    }

    // 14. n'', o'': P->n' mirrored in the parallel to HI through P, then
    // carried to the ring.
    const Vec2 hi_dir = t.line(LineId::HI).direction();
    auto construct_n2 = [&](Point2 centre, Point2 tangent_foot, Point2 d_point, const Circle2& ring, Vec2 axis_dir,
                            Line2& ray_out) -> Point2 {
        const Line2 axis(centre, axis_dir);
        const Vec2 dir = reflect_direction_across_line(normalized(tangent_foot - centre), axis);
        ray_out = Line2(centre, dir);
        const auto hits = intersect_line_circle(ray_out, ring);
        if (variant.ring_pick == RingPick::ForwardRay) {
            return hits.back();
        }
        return distance(hits.front(), d_point) <= distance(hits.back(), d_point) ? hits.front() : hits.back();
    };
    const Point2 n2 = construct_n2(P, n1, D, left, hi_dir, t.line(LineId::Pn2));
    const Point2 o2 = construct_n2(Q, o1, E, right, -hi_dir, t.line(LineId::Qo2));
    t.at(Label::n2) = n2;
    t.at(Label::o2) = o2;
    log("reflect_direction_across_line", {"Pn'", "Qo'", "HI", "rings"}, {"n''", "o''"});

    t.line(LineId::Pn) = line_through(P, n, eps);
    t.line(LineId::Qo) = line_through(Q, o, eps);
    t.line(LineId::Pn1) = line_through(P, n1, eps);
    t.line(LineId::Qo1) = line_through(Q, o1, eps);

    // 15. trace P, D, n'', H, M, Q, E, o'', I, L
    log("trace_shade_path", {"P", "D", "n''", "H", "M", "Q", "E", "o''", "I", "L"}, {"shade path"});
    return t;
}

std::vector<AssertionResidual> validate_trace(const ConstructionTrace& t) {
    std::vector<AssertionResidual> out;
    auto add = [&out](std::string id, double v) { out.push_back({std::move(id), v}); };
    auto dist_to_line = [](Point2 a, Point2 b, Point2 p) {
        return std::abs(cross(normalized(b - a), p - a));
    };
    const Vec2 ray_dir = normalized(Vec2{1.0, -1.0});

    add("C_on_DE", dist_to_line(t.at(Label::D), t.at(Label::E), t.at(Label::C)));
    add("HCI_collinear", dist_to_line(t.at(Label::H), t.at(Label::I), t.at(Label::C)));
    add("HP_slope", std::abs(cross(normalized(t.at(Label::P) - t.at(Label::H)), ray_dir)));
    add("IQ_slope", std::abs(cross(normalized(t.at(Label::Q) - t.at(Label::I)), ray_dir)));
    add("LM_slope", std::abs(cross(normalized(t.at(Label::M) - t.at(Label::L)), ray_dir)));
    add("n_on_HD", dist_to_line(t.at(Label::H), t.at(Label::D), t.at(Label::n)));
    add("o_on_IE", dist_to_line(t.at(Label::I), t.at(Label::E), t.at(Label::o)));

    const double outer = t.spec.major() + t.spec.minor();
    add("n1_foot", distance(t.at(Label::n1), Point2{-outer, t.at(Label::D).z}));
    add("o1_foot", distance(t.at(Label::o1), Point2{outer, t.at(Label::E).z}));

    const Line2 pd(t.at(Label::P), t.at(Label::D) - t.at(Label::P));
    const Line2 qe(t.at(Label::Q), t.at(Label::E) - t.at(Label::Q));
    add("reflect_n_involution", distance(reflect_point_across_line(t.at(Label::n), pd), t.at(Label::n1)));
    add("reflect_o_involution", distance(reflect_point_across_line(t.at(Label::o), qe), t.at(Label::o1)));

    const Vec2 hi = t.at(Label::I) - t.at(Label::H);
    auto mirrored_line = [&](Label centre, Label foot, Label target) {
        const Line2 axis(t.at(centre), hi);
        const Vec2 back = reflect_direction_across_line(normalized(t.at(target) - t.at(centre)), axis);
        return std::abs(cross(back, normalized(t.at(foot) - t.at(centre))));
    };
    add("reflect_n2_involution", mirrored_line(Label::P, Label::n1, Label::n2));
    add("reflect_o2_involution", mirrored_line(Label::Q, Label::o1, Label::o2));
    add("n2_on_ring", std::abs(distance(t.at(Label::n2), t.at(Label::P)) - t.spec.minor()));
    add("o2_on_ring", std::abs(distance(t.at(Label::o2), t.at(Label::Q)) - t.spec.minor()));

    for (const auto& [a, b] : kSymmetricPairs) {
        const Point2 pa = t.at(a);
        const Point2 pb = t.at(b);
        add(fmt::format("symmetry_{}_{}", label_name(a), label_name(b)), std::hypot(pa.x + pb.x, pa.z + pb.z));
    }
    return out;
}

} // namespace skia
