#pragma once

#include <functional>
#include <string>
#include <utility>

#include "toro/jet.hpp"
#include "toro/plane_curve.hpp"
#include "toro/tolerances.hpp"
#include "toro/vec.hpp"

namespace toro {

/// Torus of revolution about the z axis: distance a from the axis to the
/// tube center, tube radius b, with a > b > 0.  Membership is tested
/// against the implicit form (a - sqrt(x^2+y^2))^2 + z^2 = b^2.
struct TorusSpec {
    double a;
    double b;

    TorusSpec(double a_, double b_) : a(a_), b(b_) {
        if (!(a > b && b > 0.0))
            throw InvalidArgument("torus requires a > b > 0");
    }
};

/// Which sheet of the torus the height function selects.  Fixed per
/// lift; there is no automatic branch switching.
enum class HeightBranch { Upper, Lower };

/// Implicit-equation residual (a - sqrt(x^2+y^2))^2 + z^2 - b^2.
double torus_residual(const TorusSpec& torus, Vec3 p);

/// Jet of the torus height f = +/- sqrt(b^2 - (a - sqrt(x^2+y^2))^2)
/// propagated from the base-curve jets by chain rule.  The base point
/// must lie strictly inside the annulus (a-b)^2 < x^2+y^2 < (a+b)^2,
/// with a guard band of eps_dom * (a+b)^2 on rho^2 at both edges; a
/// violation throws TorusDomainError carrying the residual
/// b^2 - (a-rho)^2.
Jet torus_height_jet(const TorusSpec& torus, const Jet2& base_jet, HeightBranch branch,
                     const Guards& guards = {});

/// Space curve gamma(t) = alpha(t) + f(t) e3 on the right cylinder over
/// a plane base curve.  The height is either derived from a torus or
/// supplied directly (an explicit closed form, a user expression, a
/// constant).  Immutable after construction; evaluation is reentrant.
class CylindricalLift {
public:
    using HeightFn = std::function<Jet(double t, int order)>;

    CylindricalLift(PlaneCurve base, HeightFn height, std::string label);

    /// Torus-derived lift on the chosen sheet.
    static CylindricalLift over_torus(PlaneCurve base, const TorusSpec& torus,
                                      HeightBranch branch = HeightBranch::Upper,
                                      const Guards& guards = {});

    /// Planar lift f == c (degenerate; tau vanishes identically).
    static CylindricalLift constant_height(PlaneCurve base, double c);

    const PlaneCurve& base() const noexcept { return base_; }
    const std::string& label() const noexcept { return label_; }

    Jet height_jet(double t, int order) const;

    /// Spatial extent max ||gamma|| probed over a coarse grid.
    const CurveScale& scale() const noexcept { return scale_; }

private:
    PlaneCurve base_;
    HeightFn height_;
    std::string label_;
    CurveScale scale_;
};

/// Component jets (x, y, f) of the lift at t.  Domain errors raised by
/// the height function are rethrown with the parameter attached.
Jet3 lift_jet3(const CylindricalLift& lift, double t, int order);

} // namespace toro
