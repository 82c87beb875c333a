#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "toro/families.hpp"
#include "toro/frenet.hpp"
#include "toro/lift.hpp"

using namespace toro;

namespace {

constexpr double kPi = 3.14159265358979323846;

Jet3 circular_helix_jets(double t, int order) {
    Jet tt = Jet::variable(t, order);
    return {cos(tt), sin(tt), tt};
}

PlaneCurve unit_circle() {
    return PlaneCurve(
        [](double t, int order) {
            Jet tt = Jet::variable(t, order);
            return Jet2{cos(tt), sin(tt)};
        },
        0.0, 2.0 * kPi, 2.0 * kPi, "circle");
}

void check_frame_invariants(const FrenetData& fr) {
    CHECK(std::abs(norm(fr.tangent) - 1.0) <= 1e-12);
    CHECK(std::abs(norm(fr.normal) - 1.0) <= 1e-12);
    CHECK(std::abs(norm(fr.binormal) - 1.0) <= 1e-12);
    CHECK(std::abs(dot(fr.tangent, fr.normal)) <= 1e-12);
    CHECK(std::abs(dot(fr.tangent, fr.binormal)) <= 1e-12);
    CHECK(std::abs(dot(fr.normal, fr.binormal)) <= 1e-12);
    // right-handed: det[T N B] = <T x N, B> = +1
    CHECK(std::abs(dot(cross(fr.tangent, fr.normal), fr.binormal) - 1.0) <= 1e-12);
}

} // namespace

TEST_CASE("circular helix has kappa = tau = 1/2") {
    for (double t : {0.0, 0.7, 2.0, 4.5}) {
        FrenetData fr = frenet_general(circular_helix_jets(t, 3));
        CHECK(fr.kappa == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(fr.tau == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(fr.speed == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
        check_frame_invariants(fr);
    }

    SUBCASE("classical frame at t = 0") {
        FrenetData fr = frenet_general(circular_helix_jets(0.0, 3));
        double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        CHECK(fr.tangent.x == doctest::Approx(0.0));
        CHECK(fr.tangent.y == doctest::Approx(inv_sqrt2));
        CHECK(fr.tangent.z == doctest::Approx(inv_sqrt2));
        CHECK(fr.normal.x == doctest::Approx(-1.0));
        CHECK(fr.normal.y == doctest::Approx(0.0));
        CHECK(fr.normal.z == doctest::Approx(0.0));
        CHECK(fr.binormal.x == doctest::Approx(0.0));
        CHECK(fr.binormal.y == doctest::Approx(-inv_sqrt2));
        CHECK(fr.binormal.z == doctest::Approx(inv_sqrt2));
    }
}

TEST_CASE("planar lifts have zero torsion") {
    CylindricalLift lift = CylindricalLift::constant_height(unit_circle(), 3.0);
    for (double t : {0.3, 1.9, 4.2}) {
        FrenetData fr = frenet_general(lift_jet3(lift, t, 3));
        CHECK(fr.tau == 0.0);
    }
}

TEST_CASE("degenerate inputs raise typed errors") {
    SUBCASE("zero speed") {
        Jet3 still{Jet::constant(1.0, 3), Jet::constant(2.0, 3), Jet::constant(0.0, 3)};
        CHECK_THROWS_AS(frenet_general(still), RegularityError);
    }
    SUBCASE("straight line has no frame") {
        Jet tt = Jet::variable(0.4, 3);
        Jet3 line{tt, Jet::constant(0.0, 3), Jet::constant(0.0, 3)};
        CHECK_THROWS_AS(frenet_general(line), FlatnessError);
    }
    SUBCASE("order must be at least 3") {
        Jet3 shallow{Jet::variable(0.0, 2), Jet::constant(0.0, 2), Jet::constant(0.0, 2)};
        CHECK_THROWS_AS(frenet_general(shallow), InvalidArgument);
    }
}

TEST_CASE("kappa_cylindrical collapses to |K| for flat heights") {
    FamilySpec spec;
    spec.kind = FamilyKind::Epicycloid;
    spec.R = 2.0;
    spec.r = 1.0;
    PlaneCurve nephroid = family_curve(spec);
    for (double t : {0.8, 2.1, 3.9}) {
        Jet2 base = nephroid.jets(t, 2);
        Jet flat = Jet::constant(0.0, 2);
        double K = signed_curvature(nephroid, t).K;
        CHECK(kappa_cylindrical(base, flat) == doctest::Approx(std::abs(K)).epsilon(1e-13));
    }
}

TEST_CASE("unit circle with linear height is the circular helix") {
    PlaneCurve circle = unit_circle();
    for (double t : {0.0, 1.1, 3.7}) {
        Jet2 base = circle.jets(t, 3);
        Jet f = Jet::variable(t, 3);
        CHECK(kappa_cylindrical(base, f) == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(tau_cylindrical(base, f) == doctest::Approx(0.5).epsilon(1e-14));

        FrenetData fr = frame_cylindrical(base, f, 1.0, 1.0);
        FrenetData reference = frenet_general(circular_helix_jets(t, 3));
        CHECK(norm(fr.tangent - reference.tangent) <= 1e-14);
        CHECK(norm(fr.normal - reference.normal) <= 1e-14);
        CHECK(norm(fr.binormal - reference.binormal) <= 1e-14);
        check_frame_invariants(fr);
    }
}

TEST_CASE("constant heights kill the cylindrical torsion") {
    PlaneCurve circle = unit_circle();
    Jet2 base = circle.jets(0.9, 3);
    Jet f = Jet::constant(2.0, 3);
    CHECK(tau_cylindrical(base, f) == 0.0);
}

TEST_CASE("flat-base binormal is e3 for counterclockwise curves") {
    PlaneCurve circle = unit_circle();  // K = 1 > 0
    Jet2 base = circle.jets(1.7, 3);
    Jet f = Jet::constant(0.0, 3);
    FrenetData fr = frame_cylindrical(base, f, 1.0, 1.0);
    CHECK(fr.binormal.x == doctest::Approx(0.0));
    CHECK(fr.binormal.y == doctest::Approx(0.0));
    CHECK(fr.binormal.z == doctest::Approx(1.0));
}

TEST_CASE("cross-path agreement at reference points") {
    struct Probe {
        const char* preset;
        double t;
    };
    for (Probe probe : {Probe{"helix", 0.3}, Probe{"cardioid-strict", 1.0},
                        Probe{"nephroid-strict", 2.0}, Probe{"deltoid-strict", 1.5}}) {
        const Preset* preset = find_preset(probe.preset);
        REQUIRE(preset != nullptr);
        CylindricalLift lift = preset_lift(*preset);
        CurveScale scale = lift.scale();

        Jet3 j3 = lift_jet3(lift, probe.t, 3);
        FrenetData general = frenet_general(j3, {}, scale);

        Jet2 base = lift.base().jets(probe.t, 3);
        Jet f = lift.height_jet(probe.t, 3);
        double K = signed_curvature_jet(base).value();
        double s_dot = speed_jet(base).value();

        CHECK(std::abs(kappa_cylindrical(base, f, {}, scale) - general.kappa) <=
              1e-9 * general.kappa);
        CHECK(std::abs(tau_cylindrical(base, f, {}, scale) - general.tau) <=
              1e-9 * (1.0 + std::abs(general.tau)));

        FrenetData cyl = frame_cylindrical(base, f, K, s_dot, {}, scale);
        CHECK(norm(cyl.tangent - general.tangent) <= 1e-9);
        CHECK(norm(cyl.normal - general.normal) <= 1e-9);
        CHECK(norm(cyl.binormal - general.binormal) <= 1e-9);
        check_frame_invariants(cyl);
    }
}

TEST_CASE("derivative-structure identities of the lift") {
    const Preset* preset = find_preset("astroid-strict");
    REQUIRE(preset != nullptr);
    CylindricalLift lift = preset_lift(*preset);
    for (int i = 0; i < 128; ++i) {
        double t = lift.base().t_min() +
                   (lift.base().t_max() - lift.base().t_min()) * (i + 0.5) / 128;
        Jet3 j3 = lift_jet3(lift, t, 3);
        Jet2 base = lift.base().jets(t, 3);
        Jet f = lift.height_jet(t, 3);
        double K = signed_curvature_jet(base).value();
        double s_dot = speed_jet(base).value();

        Vec3 d1{j3.x[1], j3.y[1], j3.z[1]};
        Vec3 d2{j3.x[2], j3.y[2], j3.z[2]};
        Vec3 cr = cross(d1, d2);

        double turn = s_dot * s_dot * s_dot * K;
        Vec2 a1{base.x[1], base.y[1]};
        Vec2 a2{base.x[2], base.y[2]};
        Vec2 w = f[2] * a1 - f[1] * a2;

        // g' x g'' decomposes into the planar couple and the turning part
        CHECK(norm(cr - embed(-j_rotate(w), turn)) <= 1e-12 * norm(cr));
        // its norm and the lift speed in closed form
        CHECK(std::abs(norm(cr) - std::sqrt(turn * turn + dot(w, w))) <= 1e-12 * norm(cr));
        CHECK(std::abs(norm(d1) - std::sqrt(s_dot * s_dot + f[1] * f[1])) <= 1e-12 * norm(d1));
    }
}

TEST_CASE("kappa jet tracks finite differences of kappa") {
    CylindricalLift lift = helix_lift(4.0, 1.0, 12);
    auto kappa_of = [&lift](double u) { return frenet_general(lift_jet3(lift, u, 3)).kappa; };
    for (double t : {0.5, 1.6, 3.1}) {
        Jet kj = kappa_jet_general(lift_jet3(lift, t, 3));
        CHECK(kj.value() == doctest::Approx(kappa_of(t)).epsilon(1e-13));
        double h = 1e-6;
        double fd = (kappa_of(t + h) - kappa_of(t - h)) / (2.0 * h);
        CHECK(std::abs(kj[1] - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
    }
}
