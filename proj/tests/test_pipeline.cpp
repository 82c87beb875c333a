#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "toro/expression.hpp"
#include "toro/families.hpp"
#include "toro/pipeline.hpp"

using namespace toro;

namespace {

SampleSeries run_preset(const char* name, int samples) {
    const Preset* preset = find_preset(name);
    REQUIRE(preset != nullptr);
    CylindricalLift lift = preset_lift(*preset);
    TorusCompatibility compat = torus_compat(preset_family(*preset), preset_torus(*preset));
    return sample_lift(lift, compat.cusp_params, samples);
}

} // namespace

TEST_CASE("helix sampling is all ok and one arc") {
    SampleSeries series = run_preset("helix", 1000);
    CHECK(series.records.size() == 1000);
    REQUIRE(series.arcs.size() == 1);
    CHECK(series.arcs[0].first == 0);
    CHECK(series.arcs[0].second == 1000);
    for (const SampleRecord& rec : series.records) CHECK(rec.status == SampleStatus::Ok);
}

TEST_CASE("cardioid sampling splits into one interior arc") {
    SampleSeries series = run_preset("cardioid-strict", 100);
    CHECK(series.records.size() == 100);
    // the endpoints sit on the cusp at t = 0 (mod 2 pi), where the base
    // touches the inner equator: a domain verdict outranks the guard band
    CHECK(series.records.front().status == SampleStatus::Domain);
    CHECK(series.records.back().status == SampleStatus::Domain);
    REQUIRE(series.arcs.size() == 1);
    CHECK(series.arcs[0].first == 1);
    CHECK(series.arcs[0].second == 99);
}

TEST_CASE("the mirror-symmetric point of the cardioid has no torsion") {
    // an odd grid lands on t = pi exactly, where tau vanishes by the
    // curve's mirror symmetry and c2 is undefined
    SampleSeries series = run_preset("cardioid-strict", 101);
    CHECK(series.records[50].status == SampleStatus::TorsionZero);
    CHECK(series.arcs.size() == 2);
}

TEST_CASE("touch presets lose the odd multiples of pi as well") {
    SampleSeries series = run_preset("cardioid-touch", 9);  // includes t = pi exactly
    CHECK(series.records.size() == 9);
    CHECK(series.records[4].status == SampleStatus::Domain);  // t = pi
    CHECK(series.arcs.size() == 2);
}

TEST_CASE("a two-point grid works") {
    SampleSeries series = run_preset("cardioid-strict", 2);
    CHECK(series.records.size() == 2);
    CHECK(series.arcs.empty());
    for (const SampleRecord& rec : series.records) CHECK(rec.status == SampleStatus::Domain);
}

TEST_CASE("fewer than two samples is invalid") {
    const Preset* preset = find_preset("helix");
    CylindricalLift lift = preset_lift(*preset);
    CHECK_THROWS_AS(sample_lift(lift, {}, 1), InvalidArgument);
}

TEST_CASE("parallel and sequential sampling agree bitwise") {
    const Preset* preset = find_preset("nephroid-strict");
    CylindricalLift lift = preset_lift(*preset);
    TorusCompatibility compat = torus_compat(preset_family(*preset), preset_torus(*preset));
    SampleSeries par = sample_lift(lift, compat.cusp_params, 700, {}, true);
    SampleSeries seq = sample_lift(lift, compat.cusp_params, 700, {}, false);
    REQUIRE(par.records.size() == seq.records.size());
    for (size_t i = 0; i < par.records.size(); ++i) {
        CHECK(par.records[i].status == seq.records[i].status);
        CHECK(par.records[i].t == seq.records[i].t);
        CHECK(par.records[i].kappa == seq.records[i].kappa);
        CHECK(par.records[i].tau == seq.records[i].tau);
        CHECK(par.records[i].c2 == seq.records[i].c2);
        CHECK(par.records[i].beta.x == seq.records[i].beta.x);
    }
    CHECK(par.arcs == seq.arcs);
}

TEST_CASE("expression domain errors become domain verdicts, not crashes") {
    // sqrt(t-1) is undefined on [0, 1); those samples must come back as
    // domain records even when the grid fans out across threads
    PlaneCurve curve = expression_curve("sqrt(t-1)", "t", 0.0, 2.0);
    CylindricalLift lift(curve, [](double t, int order) { return Jet::variable(t, order); },
                         "partial");
    SampleSeries series = sample_lift(lift, {}, 50, {}, true);
    int domain = 0;
    for (const SampleRecord& rec : series.records)
        if (rec.status == SampleStatus::Domain) ++domain;
    CHECK(domain >= 24);  // the samples with t < 1
    CHECK(series.records.front().status == SampleStatus::Domain);
}

TEST_CASE("planar lifts report torsion_zero") {
    PlaneCurve circle = expression_curve("cos(t)", "sin(t)", 0.0, 6.283185307179586);
    CylindricalLift lift = CylindricalLift::constant_height(circle, 0.0);
    SampleSeries series = sample_lift(lift, {}, 16);
    for (const SampleRecord& rec : series.records)
        CHECK(rec.status == SampleStatus::TorsionZero);
    CHECK(series.arcs.empty());
}

TEST_CASE("records carry consistent ok-fields") {
    SampleSeries series = run_preset("helix", 64);
    for (const SampleRecord& rec : series.records) {
        REQUIRE(rec.status == SampleStatus::Ok);
        CHECK(rec.gamma.x == rec.alpha_x);
        CHECK(rec.gamma.y == rec.alpha_y);
        CHECK(rec.gamma.z == rec.f);
        CHECK(rec.kappa > 0.0);
        CHECK(rec.c1 == doctest::Approx(1.0 / rec.kappa).epsilon(1e-12));
        CHECK(std::abs(norm(rec.T) - 1.0) <= 1e-12);
        CHECK(std::abs(norm(rec.N) - 1.0) <= 1e-12);
        CHECK(std::abs(norm(rec.B) - 1.0) <= 1e-12);
        // the two focal representations coincide
        Vec3 projected{rec.beta.x, rec.beta.y, rec.f_tilde};
        CHECK(norm(rec.C - projected) <= 1e-10 * (1.0 + norm(rec.C)));
    }
}

TEST_CASE("status to_string covers all codes") {
    CHECK(std::string(to_string(SampleStatus::Ok)) == "ok");
    CHECK(std::string(to_string(SampleStatus::NearCusp)) == "near_cusp");
    CHECK(std::string(to_string(SampleStatus::Flat)) == "flat");
    CHECK(std::string(to_string(SampleStatus::TorsionZero)) == "torsion_zero");
    CHECK(std::string(to_string(SampleStatus::Domain)) == "domain");
}
