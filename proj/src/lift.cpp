#include "toro/lift.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace toro {

double torus_residual(const TorusSpec& torus, Vec3 p) {
    double rho = std::hypot(p.x, p.y);
    double d = torus.a - rho;
    return d * d + p.z * p.z - torus.b * torus.b;
}

Jet torus_height_jet(const TorusSpec& torus, const Jet2& base_jet, HeightBranch branch,
                     const Guards& guards) {
    const double a = torus.a;
    const double b = torus.b;
    const double outer_sq = (a + b) * (a + b);
    const double inner_sq = (a - b) * (a - b);
    const double band = guards.eps_dom * outer_sq;

    Jet rho_sq = base_jet.x * base_jet.x + base_jet.y * base_jet.y;
    const double rho_sq0 = rho_sq.value();
    if (!(rho_sq0 > inner_sq + band && rho_sq0 < outer_sq - band)) {
        double rho = std::sqrt(std::max(rho_sq0, 0.0));
        double d = a - rho;
        std::ostringstream msg;
        msg << "base point at distance " << rho << " from the axis is outside the open annulus ("
            << (a - b) << ", " << (a + b) << ")";
        throw TorusDomainError(msg.str(), b * b - d * d);
    }

    Jet rho = sqrt(rho_sq);
    Jet gap = Jet::constant(a, rho.order()) - rho;
    Jet radicand = Jet::constant(b * b, rho.order()) - gap * gap;
    // The annulus guard already bounds the radicand away from zero, so
    // the sqrt below cannot throw.
    Jet f = sqrt(radicand);
    return branch == HeightBranch::Upper ? f : -f;
}

namespace {

CurveScale probe_lift_scale(const PlaneCurve& base, const CylindricalLift::HeightFn& height) {
    constexpr int probes = 64;
    CurveScale scale{0.0, 0.0};
    for (int i = 0; i < probes; ++i) {
        double t = base.t_min() + (base.t_max() - base.t_min()) * (i + 0.5) / probes;
        try {
            Jet2 j = base.jets(t, 1);
            Jet f = height(t, 1);
            scale.speed = std::max(scale.speed, std::sqrt(j.x[1] * j.x[1] + j.y[1] * j.y[1] + f[1] * f[1]));
            scale.extent = std::max(scale.extent,
                                    std::sqrt(j.x[0] * j.x[0] + j.y[0] * j.y[0] + f[0] * f[0]));
        } catch (const Error&) {
            // Probes that land in a guard band contribute nothing.
        }
    }
    if (scale.speed == 0.0) scale.speed = 1.0;
    if (scale.extent == 0.0) scale.extent = 1.0;
    return scale;
}

} // namespace

CylindricalLift::CylindricalLift(PlaneCurve base, HeightFn height, std::string label)
    : base_(std::move(base)), height_(std::move(height)), label_(std::move(label)) {
    scale_ = probe_lift_scale(base_, height_);
}

CylindricalLift CylindricalLift::over_torus(PlaneCurve base, const TorusSpec& torus,
                                            HeightBranch branch, const Guards& guards) {
    PlaneCurve base_copy = base;
    auto height = [base_copy, torus, branch, guards](double t, int order) {
        return torus_height_jet(torus, base_copy.jets(t, order), branch, guards);
    };
    std::string label = base.label() + "-on-torus";
    return CylindricalLift(std::move(base), std::move(height), std::move(label));
}

CylindricalLift CylindricalLift::constant_height(PlaneCurve base, double c) {
    auto height = [c](double t, int order) {
        (void)t;
        return Jet::constant(c, order);
    };
    std::string label = base.label() + "-planar";
    return CylindricalLift(std::move(base), std::move(height), std::move(label));
}

Jet CylindricalLift::height_jet(double t, int order) const { return height_(t, order); }

Jet3 lift_jet3(const CylindricalLift& lift, double t, int order) {
    Jet2 base = lift.base().jets(t, order);
    try {
        Jet f = lift.height_jet(t, order);
        return {base.x, base.y, f};
    } catch (TorusDomainError& err) {
        err.set_param(t);
        throw;
    } catch (Error& err) {
        err.set_param(t);
        throw;
    }
}

} // namespace toro
