#include "closed_forms.hpp"

#include "skia/construction.hpp"
#include "skia/error.hpp"

#include <algorithm>
#include <cmath>
#include <gtest/gtest.h>
#include <random>

using namespace skia;

namespace {

double max_residual(const ConstructionTrace& t) {
    double worst = 0.0;
    for (const auto& a : validate_trace(t)) {
        worst = std::max(worst, a.residual);
    }
    return worst;
}

double residual_of(const std::vector<AssertionResidual>& all, const std::string& id) {
    for (const auto& a : all) {
        if (a.id == id) return a.residual;
    }
    ADD_FAILURE() << "missing assertion " << id;
    return 0.0;
}

void expect_near(Point2 got, Point2 want, double tol) {
    EXPECT_NEAR(got.x, want.x, tol);
    EXPECT_NEAR(got.z, want.z, tol);
}

} // namespace

TEST(Radii, FromOutline) {
    const Radii a = derive_radii(6, 2);
    EXPECT_DOUBLE_EQ(a.major, 2.0);
    EXPECT_DOUBLE_EQ(a.minor, 1.0);
    const Radii b = derive_radii(20, 6);
    EXPECT_DOUBLE_EQ(b.major, 7.0);
    EXPECT_DOUBLE_EQ(b.minor, 3.0);
    const TorusElevationSpec horn(12, 6);
    EXPECT_TRUE(horn.is_horn());
    EXPECT_DOUBLE_EQ(horn.major(), 3.0);
}

TEST(Radii, InvalidOutlines) {
    try {
        TorusElevationSpec(10, 6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SpindleNotSupported);
    }
    for (auto [w, h] : {std::pair{0.0, 2.0}, {6.0, 0.0}, {-6.0, 2.0}}) {
        try {
            TorusElevationSpec(w, h);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NonPositiveDimension);
        }
    }
}

TEST(Construction, UnitRingPoints) {
    const auto t = run_construction(TorusElevationSpec(6, 2));
    // 30-digit reference values for R = 2, r = 1
    constexpr double tol = 1e-12;
    expect_near(t.at(Label::A), {-3, 0}, tol);
    expect_near(t.at(Label::B), {3, 0}, tol);
    expect_near(t.at(Label::C), {0, 0}, tol);
    expect_near(t.at(Label::P), {-2, 0}, tol);
    expect_near(t.at(Label::Q), {2, 0}, tol);
    expect_near(t.at(Label::D), {-2.7071067811865475, -0.7071067811865475}, tol);
    expect_near(t.at(Label::E), {2.7071067811865475, 0.7071067811865475}, tol);
    expect_near(t.at(Label::H), {-2.7071067811865475, 0.7071067811865475}, tol);
    expect_near(t.at(Label::I), {2.7071067811865475, -0.7071067811865475}, tol);
    expect_near(t.at(Label::J), {-1.5857864376269050, -0.4142135623730950}, tol);
    expect_near(t.at(Label::K), {1.5857864376269050, 0.4142135623730950}, tol);
    expect_near(t.at(Label::L), {-0.5857864376269050, 0.5857864376269050}, tol);
    expect_near(t.at(Label::M), {0.5857864376269050, -0.5857864376269050}, tol);
    expect_near(t.at(Label::n), {-2.7071067811865475, -1.0}, tol);
    expect_near(t.at(Label::n1), {-3.0, -0.7071067811865475}, tol);
    expect_near(t.at(Label::n2), {-2.4298493063551932, 0.9029006444930468}, 1e-9);
    expect_near(t.at(Label::o2), {2.4298493063551932, -0.9029006444930468}, 1e-9);
}

TEST(Construction, DEHasExpectedSlope) {
    const auto t = run_construction(TorusElevationSpec(6, 2));
    const Vec2 d = t.line(LineId::DE).direction();
    EXPECT_NEAR(d.z / d.x, 0.2612038749637414, 1e-12);
    EXPECT_NEAR(t.line(LineId::DE).distance_to(t.at(Label::C)), 0.0, 1e-12);
}

TEST(Construction, HornTorus) {
    const auto t = run_construction(TorusElevationSpec(12, 6));
    expect_near(t.at(Label::D), {-5.121320343559643, -2.121320343559643}, 1e-12);
    expect_near(t.at(Label::P), {-3, 0}, 1e-12);
    EXPECT_LT(max_residual(t), 1e-9 * 12);
}

TEST(Construction, StepLog) {
    const auto t = run_construction(TorusElevationSpec(6, 2));
    ASSERT_EQ(static_cast<int>(t.steps.size()), kCanonicalStepCount);
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        EXPECT_EQ(t.steps[i].index, static_cast<int>(i) + 1);
        EXPECT_FALSE(t.steps[i].op.empty());
        EXPECT_FALSE(t.steps[i].outputs.empty());
    }
}

TEST(Construction, AllVariantsConstruct) {
    for (const auto v : InterpretationVariant::all()) {
        const auto t = run_construction(TorusElevationSpec(16, 4), v);
        EXPECT_EQ(t.variant, v);
        for (const Point2& p : t.points) {
            EXPECT_TRUE(is_finite(p)) << v.name();
        }
    }
}

TEST(Construction, VariantRules) {
    const TorusElevationSpec spec(6, 2);
    InterpretationVariant tangent;
    tangent.h_rule = HRule::RingTangent;
    expect_near(run_construction(spec, tangent).at(Label::H), {-2 + 0.7071067811865475, -0.7071067811865475},
                1e-12);

    InterpretationVariant meet;
    meet.lm_rule = LmRule::VerticalMeet;
    const auto tm = run_construction(spec, meet);
    expect_near(tm.at(Label::L), {-1.5857864376269050, 1.5857864376269050}, 1e-12);
    // The vertical reading leaves the outline, which is why it is not canonical.
    EXPECT_GT(std::abs(tm.at(Label::L).z), spec.minor());
}

TEST(Variant, NamesRoundTrip) {
    const auto all = InterpretationVariant::all();
    EXPECT_TRUE(all[0].is_canonical());
    for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(all[i].ordinal(), i);
        const auto back = InterpretationVariant::parse(all[i].name());
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, all[i]);
    }
    EXPECT_EQ(InterpretationVariant::canonical().name(), "vertical_chord+orthogonal_foot+forward_ray");
    EXPECT_TRUE(InterpretationVariant::parse("canonical")->is_canonical());
    EXPECT_FALSE(InterpretationVariant::parse("bogus").has_value());
}

TEST(Labels, DrawingNames) {
    EXPECT_EQ(label_name(Label::n1), "n'");
    EXPECT_EQ(label_name(Label::o2), "o''");
    EXPECT_EQ(label_name(Label::A), "A");
    EXPECT_EQ(all_labels().size(), 19u);
}

TEST(Validator, DetectsPerturbedD) {
    auto t = run_construction(TorusElevationSpec(6, 2));
    const Vec2 normal = perp(t.line(LineId::DE).direction());
    t.at(Label::D) = t.at(Label::D) + 1e-3 * normal;
    const auto all = validate_trace(t);
    const double r = residual_of(all, "C_on_DE");
    EXPECT_GE(r, 4.9e-4);
    EXPECT_LE(r, 1e-3);
}

TEST(ConstructionProperties, FullMatrixMatchesClosedForms) {
    int count = 0;
    for (int w = 12; w <= 20; ++w) {
        for (int h = 1; h <= 6; ++h) {
            if (w < 2 * h) continue;
            ++count;
            const auto t = run_construction(TorusElevationSpec(w, h));
            const auto k = closed_forms::canonical(w, h);
            const double tol = 1e-9 * w;
            expect_near(t.at(Label::A), k.A, tol);
            expect_near(t.at(Label::P), k.P, tol);
            expect_near(t.at(Label::D), k.D, tol);
            expect_near(t.at(Label::E), k.E, tol);
            expect_near(t.at(Label::H), k.H, tol);
            expect_near(t.at(Label::J), k.J, tol);
            expect_near(t.at(Label::L), k.L, tol);
            expect_near(t.at(Label::n), k.n, tol);
            expect_near(t.at(Label::n1), k.n1, tol);
            EXPECT_LT(max_residual(t), tol) << w << "x" << h;
            for (const auto& [a, b] : kSymmetricPairs) {
                EXPECT_LT(distance(t.at(a), -t.at(b)), tol);
            }
        }
    }
    EXPECT_EQ(count, 54);
}

TEST(ConstructionProperties, ScaleEquivariance) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> hd(0.5, 6.0);
    std::uniform_real_distribution<double> ratio(2.0, 6.0);
    for (int i = 0; i < 20; ++i) {
        const double h = hd(rng);
        const double w = h * ratio(rng);
        const auto a = run_construction(TorusElevationSpec(w, h));
        const auto b = run_construction(TorusElevationSpec(2 * w, 2 * h));
        for (std::size_t k = 0; k < kLabelCount; ++k) {
            EXPECT_LT(distance(2.0 * a.points[k], b.points[k]), 1e-9 * w);
        }
    }
}

TEST(ConstructionProperties, RandomValidConfigsHaveSmallResiduals) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> hd(0.01, 50.0);
    std::uniform_real_distribution<double> ratio(2.0, 10.0);
    for (int i = 0; i < 500; ++i) {
        const double h = hd(rng);
        const double w = h * ratio(rng);
        const auto t = run_construction(TorusElevationSpec(w, h));
        ASSERT_LT(max_residual(t), 1e-9 * w) << w << "x" << h;
    }
}
