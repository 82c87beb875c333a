#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "toro/families.hpp"
#include "toro/lift.hpp"

using namespace toro;

namespace {

constexpr double kPi = 3.14159265358979323846;

PlaneCurve unit_circle() {
    return PlaneCurve(
        [](double t, int order) {
            Jet tt = Jet::variable(t, order);
            return Jet2{cos(tt), sin(tt)};
        },
        0.0, 2.0 * kPi, 2.0 * kPi, "circle");
}

} // namespace

TEST_CASE("torus parameters are validated") {
    CHECK_THROWS_AS(TorusSpec(1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(TorusSpec(1.0, 2.0), InvalidArgument);
    CHECK_THROWS_AS(TorusSpec(1.0, 0.0), InvalidArgument);
}

TEST_CASE("torus residual vanishes on the surface") {
    TorusSpec torus(2.0, 1.0);
    CHECK(torus_residual(torus, {3.0, 0.0, 0.0}) == 0.0);
    CHECK(torus_residual(torus, {2.0, 0.0, 1.0}) == 0.0);
    CHECK(torus_residual(torus, {0.0, 1.0, 0.0}) == 0.0);
    CHECK(torus_residual(torus, {2.0, 0.0, 0.0}) == doctest::Approx(-1.0));
}

TEST_CASE("height on the tube-center circle is the tube radius") {
    TorusSpec torus(2.0, 1.0);
    // point with x^2+y^2 = a^2, generic first derivatives
    Jet2 base{Jet::from_coeffs({2.0, 0.3, -0.1}), Jet::from_coeffs({0.0, 1.1, 0.2})};
    Jet up = torus_height_jet(torus, base, HeightBranch::Upper);
    Jet down = torus_height_jet(torus, base, HeightBranch::Lower);
    CHECK(up.value() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(down.value() == doctest::Approx(-1.0).epsilon(1e-14));

    // chain rule: at rho = a the gap (a - rho) vanishes, so the first
    // derivative of f = sqrt(b^2 - gap^2) vanishes with it
    CHECK(std::abs(up[1]) <= 1e-12);
}

TEST_CASE("annulus boundary points are domain errors") {
    TorusSpec torus(2.0, 1.0);
    Jet2 outer{Jet::from_coeffs({3.0, 1.0}), Jet::from_coeffs({0.0, 1.0})};
    CHECK_THROWS_AS(torus_height_jet(torus, outer, HeightBranch::Upper), TorusDomainError);

    Jet2 inner{Jet::from_coeffs({1.0, 1.0}), Jet::from_coeffs({0.0, 1.0})};
    CHECK_THROWS_AS(torus_height_jet(torus, inner, HeightBranch::Upper), TorusDomainError);

    try {
        torus_height_jet(torus, outer, HeightBranch::Upper);
    } catch (const TorusDomainError& err) {
        // residual b^2 - (a - rho)^2 is zero at the outer equator
        CHECK(std::abs(err.residual()) <= 1e-12);
    }
}

TEST_CASE("cardioid height matches the closed form") {
    // r = a/4, b = 3a/4 with a = 4
    const double r = 1.0;
    FamilySpec spec;
    spec.kind = FamilyKind::Epicycloid;
    spec.R = spec.r = r;
    PlaneCurve cardioid = family_curve(spec);
    TorusSpec torus(4.0 * r, 3.0 * r);

    for (double t : {0.5, 1.2, kPi / 2, 3.0, 5.0}) {
        Jet2 base = cardioid.jets(t, 2);
        Jet f = torus_height_jet(torus, base, HeightBranch::Upper);
        double closed = r * std::sqrt(9.0 - std::pow(4.0 - std::sqrt(5.0 - 4.0 * std::cos(t)), 2));
        CHECK(f.value() == doctest::Approx(closed).epsilon(1e-12));
    }
}

TEST_CASE("height jets agree with finite differences of the closed form") {
    const Preset* preset = find_preset("cardioid-strict");
    REQUIRE(preset != nullptr);
    CylindricalLift lift = preset_lift(*preset);
    auto f = [&lift](double t) { return lift.height_jet(t, 0).value(); };

    for (double t : {0.8, 1.7, 2.9, 4.4}) {
        Jet analytic = lift.height_jet(t, 2);
        Jet numeric = fd_jet(f, t, 2, 1e-4);
        CHECK(std::abs(analytic[1] - numeric[1]) <= 1e-6 * std::max(1.0, std::abs(analytic[1])));
        CHECK(std::abs(analytic[2] - numeric[2]) <= 1e-6 * std::max(1.0, std::abs(analytic[2])));
    }
}

TEST_CASE("zero height lift stays planar") {
    CylindricalLift lift = CylindricalLift::constant_height(unit_circle(), 0.0);
    Jet3 j = lift_jet3(lift, 1.0, 3);
    for (int k = 0; k <= 3; ++k) CHECK(j.z[k] == 0.0);
}

TEST_CASE("linear height over the circle gives the classical helix tangent") {
    CylindricalLift lift(unit_circle(),
                         [](double t, int order) { return Jet::variable(t, order); }, "helix");
    for (double t : {0.0, 1.0, 2.5}) {
        Jet3 j = lift_jet3(lift, t, 1);
        CHECK(j.x[1] == doctest::Approx(-std::sin(t)).epsilon(1e-15));
        CHECK(j.y[1] == doctest::Approx(std::cos(t)).epsilon(1e-15));
        CHECK(j.z[1] == 1.0);
    }
}

TEST_CASE("toroidal helix lift jets match finite differences of the explicit formula") {
    const double a = 4.0, b = 1.0;
    const int n = 12;
    CylindricalLift lift = helix_lift(a, b, n);

    auto component = [&](int c) {
        return [c, a, b, n](double t) {
            double radius = a + b * std::cos(n * t);
            if (c == 0) return std::cos(t) * radius;
            if (c == 1) return std::sin(t) * radius;
            return b * std::sin(n * t);
        };
    };

    for (double t : {0.4, 1.3, 2.2, 5.9}) {
        Jet3 j = lift_jet3(lift, t, 2);
        for (int c = 0; c < 3; ++c) {
            const Jet& analytic = c == 0 ? j.x : (c == 1 ? j.y : j.z);

            // value and first derivative: direct stencil on the formula
            Jet numeric = fd_jet(component(c), t, 1, 1e-5);
            for (int k = 0; k <= 1; ++k)
                CHECK(std::abs(analytic[k] - numeric[k]) <=
                      1e-6 * std::max(1.0, std::abs(analytic[k])));

            // second derivative: difference of the analytic first
            // derivative (a raw 3-point stencil at this step sits at
            // the double-precision noise floor, above 1e-6)
            auto d1 = [&lift, c](double u) {
                Jet3 jj = lift_jet3(lift, u, 1);
                return c == 0 ? jj.x[1] : (c == 1 ? jj.y[1] : jj.z[1]);
            };
            double h = 1e-5;
            double fd2 = (d1(t + h) - d1(t - h)) / (2.0 * h);
            CHECK(std::abs(analytic[2] - fd2) <= 1e-6 * std::max(1.0, std::abs(analytic[2])));
        }
    }
}

TEST_CASE("branch symmetry: the two sheets mirror in z") {
    const Preset* preset = find_preset("nephroid-strict");
    REQUIRE(preset != nullptr);
    CylindricalLift upper = preset_lift(*preset, HeightBranch::Upper);
    CylindricalLift lower = preset_lift(*preset, HeightBranch::Lower);
    for (int i = 0; i < 64; ++i) {
        double t = upper.base().t_min() +
                   (upper.base().t_max() - upper.base().t_min()) * (i + 0.5) / 64;
        Jet up = upper.height_jet(t, 2);
        Jet down = lower.height_jet(t, 2);
        for (int k = 0; k <= 2; ++k) CHECK(up[k] == -down[k]);
    }
}

TEST_CASE("torus membership holds along torus-derived lifts") {
    for (const char* name : {"cardioid-strict", "deltoid-touch", "astroid-strict"}) {
        const Preset* preset = find_preset(name);
        REQUIRE(preset != nullptr);
        TorusSpec torus = preset_torus(*preset);
        CylindricalLift lift = preset_lift(*preset);
        for (int i = 0; i < 256; ++i) {
            double t = lift.base().t_min() +
                       (lift.base().t_max() - lift.base().t_min()) * (i + 0.5) / 256;
            Jet3 j = lift_jet3(lift, t, 0);
            double res = torus_residual(torus, {j.x.value(), j.y.value(), j.z.value()});
            CHECK(std::abs(res) <= 1e-10 * torus.b * torus.b);
        }
    }
}

TEST_CASE("third derivatives of the height converge under step halving") {
    const Preset* preset = find_preset("cardioid-strict");
    REQUIRE(preset != nullptr);
    CylindricalLift lift = preset_lift(*preset);
    auto f = [&lift](double t) { return lift.height_jet(t, 0).value(); };

    for (double t : {0.9, 1.8, 2.7, 4.1, 5.2}) {
        double exact = lift.height_jet(t, 3)[3];
        double coarse = std::abs(fd_jet(f, t, 3, 1e-2)[3] - exact);
        double fine = std::abs(fd_jet(f, t, 3, 5e-3)[3] - exact);
        // at least one order of convergence (the stencil itself is 2nd order)
        CHECK(coarse >= 2.0 * fine);
    }
}

TEST_CASE("order-4 jets propagate through the whole lift") {
    const Preset* preset = find_preset("cardioid-strict");
    REQUIRE(preset != nullptr);
    CylindricalLift lift = preset_lift(*preset);
    auto f = [&lift](double t) { return lift.height_jet(t, 0).value(); };

    for (double t : {1.1, 2.6, 4.3}) {
        Jet3 j = lift_jet3(lift, t, 4);
        REQUIRE(j.order() == 4);
        for (int k = 0; k <= 4; ++k) CHECK(std::isfinite(j.z[k]));

        // the top coefficient against the coarse-step stencil; order 4
        // is verification headroom, so the comparison is loose
        Jet numeric = fd_jet(f, t, 4, 1e-3);
        CHECK(std::abs(j.z[4] - numeric[4]) <= 1e-2 * std::max(1.0, std::abs(j.z[4])));
    }
}

TEST_CASE("domain errors from the height carry the parameter") {
    const Preset* preset = find_preset("cardioid-strict");
    REQUIRE(preset != nullptr);
    CylindricalLift lift = preset_lift(*preset);
    try {
        lift_jet3(lift, 0.0, 2);  // the cusp touches the inner equator
        FAIL("expected TorusDomainError");
    } catch (const TorusDomainError& err) {
        CHECK(err.param() == 0.0);
    }
}
