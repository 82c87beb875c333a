#include "toro/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "toro/focal.hpp"
#include "toro/frenet.hpp"
#include "toro/lift.hpp"
#include "toro/pipeline.hpp"
#include "toro/plane_curve.hpp"

namespace toro {

namespace {

struct Accumulator {
    double max_dev = 0.0;
    double worst_t = 0.0;

    void add(double dev, double t) {
        if (dev > max_dev) {
            max_dev = dev;
            worst_t = t;
        }
    }
};

class CheckSet {
public:
    explicit CheckSet(const CheckOptions& options) : options_(options) {}

    void finish(const std::string& name, const Accumulator& acc, double default_tol,
                const std::string& note = "", double elapsed = 0.0) {
        CheckResult r;
        r.name = name;
        r.max_deviation = acc.max_dev;
        auto it = options_.tolerance_overrides.find(name);
        r.tolerance = it != options_.tolerance_overrides.end() ? it->second : default_tol;
        r.pass = acc.max_dev <= r.tolerance;
        r.worst_t = acc.worst_t;
        r.note = note;
        r.elapsed_seconds = elapsed;
        results_.push_back(std::move(r));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    const CheckOptions& options_;
    std::vector<CheckResult> results_;
};

/// Everything both routes produce at one grid point.
struct CrossPoint {
    double t;
    Jet3 j3;
    Jet2 base;
    Jet f;
    Jet K_jet;
    Jet s_jet;
    FrenetData general;
    FrenetData cylindrical;
    double kappa_cyl;
    double tau_cyl;
    FocalCurvatures focal_general;
    FocalCurvatures focal_cyl;
    Vec3 center;  // from the definitional assembly
    GeneralizedFocal projected;
};

std::vector<double> midpoint_grid(double lo, double hi, int n) {
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = lo + (hi - lo) * (i + 0.5) / n;
    return grid;
}

double rel(double delta, double reference) { return std::abs(delta) / std::abs(reference); }
double rel1(double delta, double reference) { return std::abs(delta) / (1.0 + std::abs(reference)); }

void cross_path_checks(CheckSet& set, const CylindricalLift& lift, const CheckOptions& options) {
    const Guards& guards = options.guards;
    const CurveScale scale = lift.scale();
    const double lo = lift.base().t_min();
    const double hi = lift.base().t_max();

    std::vector<CrossPoint> points;
    int skipped = 0;
    for (double t : midpoint_grid(lo, hi, options.cross_path_samples)) {
        try {
            CrossPoint p;
            p.t = t;
            p.j3 = lift_jet3(lift, t, 3);
            p.base = lift.base().jets(t, 3);
            p.f = lift.height_jet(t, 3);
            p.K_jet = signed_curvature_jet(p.base);
            p.s_jet = speed_jet(p.base);
            p.general = frenet_general(p.j3, guards, scale);
            p.kappa_cyl = kappa_cylindrical(p.base, p.f, guards, scale);
            p.tau_cyl = tau_cylindrical(p.base, p.f, guards, scale);
            p.cylindrical =
                frame_cylindrical(p.base, p.f, p.K_jet.value(), p.s_jet.value(), guards, scale);
            p.focal_general = focal_curvatures_general(kappa_jet_general(p.j3), p.general.speed,
                                                       p.general.tau, guards, scale);
            p.focal_cyl =
                focal_curvatures_cylindrical(p.base, p.f, p.K_jet, p.s_jet, guards, scale);
            Vec3 gamma{p.j3.x.value(), p.j3.y.value(), p.j3.z.value()};
            p.center = focal_point(gamma, p.general, p.focal_general.c1, p.focal_general.c2);
            p.projected = generalized_focal(p.base, p.f, p.K_jet, p.s_jet, guards, scale);
            points.push_back(std::move(p));
        } catch (const Error&) {
            ++skipped;
        }
    }
    std::ostringstream note;
    note << points.size() << " samples";
    if (skipped) note << ", " << skipped << " skipped at guards";

    Accumulator kappa, tau, frame, cross_id, norm_id, speed_id;
    Accumulator c1, c2, projection, c2_forms;
    Accumulator tangency, radius, contact;
    int flagged = 0;

    for (const CrossPoint& p : points) {
        kappa.add(rel(p.kappa_cyl - p.general.kappa, p.general.kappa), p.t);
        tau.add(rel1(p.tau_cyl - p.general.tau, p.general.tau), p.t);

        // N and B may only flip sign together; a B flip paired with a
        // tau sign flip is flagged, not silently aligned.
        double sign = dot(p.general.binormal, p.cylindrical.binormal) >= 0.0 ? 1.0 : -1.0;
        if (sign < 0.0 && std::signbit(p.tau_cyl) != std::signbit(p.general.tau)) {
            ++flagged;
            frame.add(1.0, p.t);
        } else {
            double dev = 0.0;
            Vec3 dt = p.general.tangent - p.cylindrical.tangent;
            Vec3 dn = p.general.normal - sign * p.cylindrical.normal;
            Vec3 db = p.general.binormal - sign * p.cylindrical.binormal;
            for (double d : {dt.x, dt.y, dt.z, dn.x, dn.y, dn.z, db.x, db.y, db.z})
                dev = std::max(dev, std::abs(d));
            frame.add(dev, p.t);
        }

        // identities from the lift's derivative structure
        const Vec3 d1{p.j3.x[1], p.j3.y[1], p.j3.z[1]};
        const Vec3 d2{p.j3.x[2], p.j3.y[2], p.j3.z[2]};
        const Vec3 cr = cross(d1, d2);
        const double s_dot = p.s_jet.value();
        const double turn = s_dot * s_dot * s_dot * p.K_jet.value();
        const Vec2 a1{p.base.x[1], p.base.y[1]};
        const Vec2 a2{p.base.x[2], p.base.y[2]};
        const Vec2 w = p.f[2] * a1 - p.f[1] * a2;
        const Vec3 cr_formula = embed(-j_rotate(w), turn);
        cross_id.add(norm(cr - cr_formula) / norm(cr), p.t);
        norm_id.add(rel(norm(cr) - std::sqrt(turn * turn + dot(w, w)), norm(cr)), p.t);
        speed_id.add(
            rel(norm(d1) - std::sqrt(s_dot * s_dot + p.f[1] * p.f[1]), norm(d1)), p.t);

        c1.add(rel(p.focal_cyl.c1 - p.focal_general.c1, p.focal_general.c1), p.t);
        c2.add(rel1(p.focal_cyl.c2 - p.focal_general.c2, p.focal_general.c2), p.t);

        Vec3 projected3{p.projected.beta.x, p.projected.beta.y, p.projected.f_tilde};
        projection.add(norm(p.center - projected3) / (1.0 + norm(p.center)), p.t);

        // both printed forms of the second focal curvature
        Jet kj = kappa_jet_general(p.j3).truncated(1);
        double form_a = -kj[1] / (p.general.speed * kj.value() * kj.value() * p.general.tau);
        double form_b = (1.0 / kj)[1] / (p.general.speed * p.general.tau);
        c2_forms.add(rel1(form_a - form_b, form_a), p.t);

        // osculating-sphere identities
        Vec3 gamma{p.j3.x.value(), p.j3.y.value(), p.j3.z.value()};
        Vec3 offset = p.center - gamma;
        double dist_sq = dot(offset, offset);
        double radius_sq =
            p.focal_general.c1 * p.focal_general.c1 + p.focal_general.c2 * p.focal_general.c2;
        tangency.add(std::abs(dot(offset, p.general.tangent)) / norm(offset), p.t);
        radius.add(rel(dist_sq - radius_sq, radius_sq), p.t);

        // finite-difference contact of the osculating sphere; the
        // residuals are measured against g's own magnitude, which is
        // radius^2-sized and dwarfs the curve extent wherever the
        // sphere degenerates (small torsion, c2 large)
        auto g = [&](double u) {
            Jet3 jj = lift_jet3(lift, u, 0);
            Vec3 pt{jj.x.value(), jj.y.value(), jj.z.value()};
            return dot(pt - p.center, pt - p.center);
        };
        const double h = 1e-4;
        double g0 = g(p.t) - radius_sq;
        double g1 = (g(p.t + h) - g(p.t - h)) / (2.0 * h);
        double g2 = (g(p.t + h) - 2.0 * g(p.t) + g(p.t - h)) / (h * h);
        double area = scale.extent * scale.extent + radius_sq;
        contact.add(std::max({std::abs(g0), std::abs(g1), std::abs(g2)}) / area, p.t);
    }

    set.finish("frenet_kappa", kappa, 1e-9, note.str());
    set.finish("frenet_tau", tau, 1e-9, note.str());
    std::string frame_note = note.str();
    if (flagged) frame_note += ", " + std::to_string(flagged) + " sign flips flagged";
    set.finish("frenet_frame", frame, 1e-9, frame_note);
    set.finish("frenet_cross_identity", cross_id, 1e-12, note.str());
    set.finish("frenet_norm_identity", norm_id, 1e-12, note.str());
    set.finish("frenet_speed_identity", speed_id, 1e-12, note.str());
    set.finish("focal_c1", c1, 1e-9, note.str());
    set.finish("focal_c2", c2, 1e-9, note.str());
    set.finish("focal_projection", projection, 1e-10, note.str());
    set.finish("focal_c2_forms", c2_forms, 1e-12, note.str());
    set.finish("sphere_tangency", tangency, 1e-10, note.str());
    set.finish("sphere_radius", radius, 1e-10, note.str());
    set.finish("sphere_contact", contact, 1e-6, note.str());
}

void membership_check(CheckSet& set, const CylindricalLift& lift, const TorusSpec& torus,
                      const CheckOptions& options) {
    Accumulator acc;
    int skipped = 0;
    for (double t :
         midpoint_grid(lift.base().t_min(), lift.base().t_max(), options.cross_path_samples)) {
        try {
            Jet3 j = lift_jet3(lift, t, 0);
            double res = torus_residual(torus, {j.x.value(), j.y.value(), j.z.value()});
            acc.add(std::abs(res) / (torus.b * torus.b), t);
        } catch (const Error&) {
            ++skipped;
        }
    }
    std::string note = skipped ? std::to_string(skipped) + " skipped at guards" : "";
    set.finish("torus_membership", acc, 1e-10, note);
}

void z_closed_form_check(CheckSet& set, const CylindricalLift& lift, const FamilySpec& family,
                         const TorusSpec& torus, const CheckOptions& options) {
    Accumulator acc;
    int skipped = 0;
    for (double t :
         midpoint_grid(lift.base().t_min(), lift.base().t_max(), options.cross_path_samples)) {
        try {
            double closed = toroidal_z_closed_form(family, torus, t);
            double generic = lift.height_jet(t, 0).value();
            acc.add(rel(closed - generic, generic), t);
        } catch (const Error&) {
            ++skipped;
        }
    }
    std::string note = skipped ? std::to_string(skipped) + " skipped at guards" : "";
    set.finish("z_closed_form", acc, 1e-10, note);
}

void helix_closed_form_check(CheckSet& set, const CylindricalLift& lift, double a, double b, int n,
                             const CheckOptions& options) {
    const Guards& guards = options.guards;
    const CurveScale scale = lift.scale();
    Accumulator acc;
    int skipped = 0;
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < options.helix_samples; ++i) {
        double t = 2.0 * 3.14159265358979323846 * i / options.helix_samples;
        try {
            Jet2 base = lift.base().jets(t, 3);
            Jet f = lift.height_jet(t, 3);
            GeneralizedFocal gf = generalized_focal(base, f, signed_curvature_jet(base),
                                                    speed_jet(base), guards, scale);
            HelixFocalPoint hf = helix_focal_closed_form(a, b, n, t);
            Vec3 pipeline{gf.beta.x, gf.beta.y, gf.f_tilde};
            Vec3 closed{hf.x_beta, hf.y_beta, hf.f_tilde};
            acc.add(norm(pipeline - closed) / norm(closed), t);
        } catch (const Error&) {
            ++skipped;
        }
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream note;
    note << options.helix_samples - skipped << " samples";
    if (skipped) note << ", " << skipped << " skipped at guards";
    set.finish("helix_focal_closed_form", acc, 1e-8, note.str(), elapsed);
}

void cusp_inventory_check(CheckSet& set, const CylindricalLift& lift,
                          const TorusCompatibility& compat, const CheckOptions& options) {
    const double period = lift.base().t_max() - lift.base().t_min();
    const double lo = lift.base().t_min();

    // The scan grid must land exactly on every multiple of pi, so its
    // cell count is a multiple of the period's pi-count.
    int nodes = options.cusp_scan_nodes;
    const double pi_units = period / 3.14159265358979323846;
    const int per = static_cast<int>(std::llround(pi_units));
    if (per >= 1 && std::abs(pi_units - per) < 1e-9)
        nodes = per * std::max(1, options.cusp_scan_nodes / 8);

    std::vector<double> detected;
    for (int i = 0; i <= nodes; ++i) {
        double t = lo + period * i / nodes;
        bool singular = false;
        Jet2 j = lift.base().jets(t, 1);
        double speed = std::hypot(j.x[1], j.y[1]);
        if (speed <= 1e-6 * lift.base().scale().speed) singular = true;
        if (!singular) {
            try {
                lift.height_jet(t, 0);
            } catch (const TorusDomainError&) {
                singular = true;
            } catch (const Error&) {
            }
        }
        if (singular) detected.push_back(t);
    }

    Accumulator acc;
    std::ostringstream note;
    note << detected.size() << " detected, " << compat.cusp_params.size() << " listed";
    if (detected.size() != compat.cusp_params.size()) {
        acc.add(1.0, detected.empty() ? lo : detected.front());
    } else {
        for (size_t i = 0; i < detected.size(); ++i)
            acc.add(std::abs(detected[i] - compat.cusp_params[i]) / (period > 0 ? period : 1.0),
                    detected[i]);
    }
    set.finish("cusp_inventory", acc, 1e-9, note.str());
}

void fd_kernel_checks(CheckSet& set, const CylindricalLift& lift, const CheckOptions& options) {
    const Guards& guards = options.guards;
    Accumulator order1, order2, order3;

    auto coeff = [&lift](int component, int order) {
        return [&lift, component, order](double u) {
            Jet3 j = lift_jet3(lift, u, order);
            const Jet& jc = component == 0 ? j.x : (component == 1 ? j.y : j.z);
            return jc[order];
        };
    };

    int skipped = 0;
    for (double t :
         midpoint_grid(lift.base().t_min(), lift.base().t_max(), options.fd_points)) {
        try {
            Jet3 j = lift_jet3(lift, t, 3);
            for (int c = 0; c < 3; ++c) {
                const Jet& jc = c == 0 ? j.x : (c == 1 ? j.y : j.z);

                // order 1: direct stencil on the raw component
                Jet fd1 = fd_jet(coeff(c, 0), t, 1, guards.fd_step_low);
                order1.add(std::abs(fd1[1] - jc[1]) / std::max(1.0, std::abs(jc[1])), t);

                // orders 2 and 3: each analytic coefficient against a
                // central difference of the analytic coefficient below it
                auto g1 = coeff(c, 1);
                double h = guards.fd_step_low;
                double fd2 = (g1(t + h) - g1(t - h)) / (2.0 * h);
                order2.add(std::abs(fd2 - jc[2]) / std::max(1.0, std::abs(jc[2])), t);

                auto g2 = coeff(c, 2);
                h = guards.fd_step_high;
                double fd3 = (g2(t + h) - g2(t - h)) / (2.0 * h);
                order3.add(std::abs(fd3 - jc[3]) / std::max(1.0, std::abs(jc[3])), t);
            }
        } catch (const Error&) {
            ++skipped;
        }
    }
    std::string note = skipped ? std::to_string(skipped) + " skipped at guards" : "";
    set.finish("fd_order1", order1, 1e-6, note);
    set.finish("fd_order2", order2, 1e-6, note);
    set.finish("fd_order3", order3, 1e-3, note);
}

void planar_degeneracy_check(CheckSet& set, const CylindricalLift& lift,
                             const CheckOptions& options) {
    const Guards& guards = options.guards;
    CylindricalLift planar = CylindricalLift::constant_height(lift.base(), 0.25);
    const CurveScale scale = planar.scale();

    Accumulator acc;
    int evaluated = 0;
    int missing_errors = 0;
    for (double t : midpoint_grid(planar.base().t_min(), planar.base().t_max(), 64)) {
        try {
            Jet3 j3 = lift_jet3(planar, t, 3);
            FrenetData frame = frenet_general(j3, guards, scale);
            acc.add(std::abs(frame.tau), t);
            ++evaluated;

            bool general_threw = false, cylindrical_threw = false;
            try {
                focal_curvatures_general(kappa_jet_general(j3), frame.speed, frame.tau, guards,
                                         scale);
            } catch (const TorsionZeroError&) {
                general_threw = true;
            }
            Jet2 base = planar.base().jets(t, 3);
            Jet f = planar.height_jet(t, 3);
            try {
                focal_curvatures_cylindrical(base, f, signed_curvature_jet(base), speed_jet(base),
                                             guards, scale);
            } catch (const TorsionZeroError&) {
                cylindrical_threw = true;
            }
            if (!general_threw || !cylindrical_threw) {
                ++missing_errors;
                acc.add(1.0, t);
            }
        } catch (const Error&) {
            // guard hits (plane cusps) are outside this check's scope
        }
    }
    std::ostringstream note;
    note << evaluated << " regular points";
    if (missing_errors) note << ", " << missing_errors << " missing TorsionZero";
    set.finish("planar_degeneracy", acc, 0.0, note.str());
}

void boundary_fuzz_check(CheckSet& set, const TorusSpec& torus, const CheckOptions& options) {
    const Guards& guards = options.guards;
    std::mt19937 rng(0x5eed1234u);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> edge_pick(0, 1);

    const double outer_sq = (torus.a + torus.b) * (torus.a + torus.b);
    const double inner_sq = (torus.a - torus.b) * (torus.a - torus.b);
    const double band = guards.eps_dom * outer_sq;

    Accumulator acc;
    int violations = 0;
    int domain_errors = 0;
    for (int i = 0; i < options.fuzz_points; ++i) {
        double edge_sq = edge_pick(rng) ? outer_sq : inner_sq;
        double rho_sq = edge_sq + 5.0 * band * unit(rng);
        if (i % 100 == 0) rho_sq = edge_sq;  // exactly on the boundary
        if (rho_sq <= 0.0) rho_sq = edge_sq;
        double rho = std::sqrt(rho_sq);
        double theta = angle(rng);

        Jet x = Jet::from_coeffs({rho * std::cos(theta), unit(rng), unit(rng), unit(rng)});
        Jet y = Jet::from_coeffs({rho * std::sin(theta), unit(rng), unit(rng), unit(rng)});
        try {
            Jet f = torus_height_jet(torus, Jet2{x, y}, HeightBranch::Upper, guards);
            for (int k = 0; k <= f.order(); ++k)
                if (!std::isfinite(f[k])) ++violations;
        } catch (const TorusDomainError& err) {
            ++domain_errors;
            if (!std::isfinite(err.residual())) ++violations;
        }
        if (violations) {
            acc.add(static_cast<double>(violations), 0.0);
            break;
        }
    }
    std::ostringstream note;
    note << options.fuzz_points << " points, " << domain_errors << " domain errors, "
         << (violations ? "NaN leaked" : "no NaN");
    set.finish("boundary_fuzz", acc, 0.0, note.str());
}

} // namespace

CheckResult check_polynomial_jets(const CheckOptions& options) {
    std::mt19937 rng(0xc0ffee11u);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_real_distribution<double> at(-3.0, 3.0);

    Accumulator acc;
    for (int trial = 0; trial < 256; ++trial) {
        double a0 = coeff(rng), a1 = coeff(rng), a2 = coeff(rng), a3 = coeff(rng), a4 = coeff(rng);
        double t = at(rng);
        // Horner evaluation through jet arithmetic
        Jet tt = Jet::variable(t, 4);
        Jet p = Jet::constant(a4, 4);
        for (double a : {a3, a2, a1, a0}) p = p * tt + Jet::constant(a, 4);

        double expected[5] = {
            a0 + t * (a1 + t * (a2 + t * (a3 + t * a4))),
            a1 + t * (2 * a2 + t * (3 * a3 + t * 4 * a4)),
            2 * a2 + t * (6 * a3 + t * 12 * a4),
            6 * a3 + t * 24 * a4,
            24 * a4,
        };
        for (int k = 0; k <= 4; ++k)
            acc.add(std::abs(p[k] - expected[k]) / std::max(1.0, std::abs(expected[k])), t);
    }

    CheckSet set(options);
    set.finish("polynomial_jets", acc, 1e-13, "256 random polynomials, degree 4");
    return set.take().front();
}

int distinct_cusp_count(const TorusCompatibility& compat) {
    int count = 0;
    for (double t : compat.cusp_params)
        if (t < compat.period - 1e-9) ++count;
    return count;
}

std::vector<CheckResult> run_preset_checks(const Preset& preset, const CheckOptions& options) {
    CheckSet set(options);

    TorusSpec torus = preset_torus(preset);
    CylindricalLift lift = preset_lift(preset, HeightBranch::Upper, options.guards);
    FamilySpec family = preset_family(preset);
    TorusCompatibility compat = torus_compat(family, torus);

    cross_path_checks(set, lift, options);
    membership_check(set, lift, torus, options);
    if (preset.kind == FamilyKind::HelixProjection)
        helix_closed_form_check(set, lift, torus.a, torus.b, preset.n, options);
    else
        z_closed_form_check(set, lift, family, torus, options);
    cusp_inventory_check(set, lift, compat, options);
    fd_kernel_checks(set, lift, options);
    planar_degeneracy_check(set, lift, options);
    boundary_fuzz_check(set, torus, options);

    std::vector<CheckResult> results = set.take();
    results.push_back(check_polynomial_jets(options));
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

} // namespace toro
