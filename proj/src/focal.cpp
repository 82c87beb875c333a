#include "toro/focal.hpp"

#include <cmath>
#include <sstream>

namespace toro {

namespace {

void check_torsion(double tau, double kappa, double speed, const Guards& guards,
                   const CurveScale& scale) {
    if (!(std::abs(tau) > guards.eps_tau * kappa * kappa * speed * scale.extent)) {
        std::ostringstream msg;
        msg << "torsion " << tau << " numerically zero: focal curvature c2 undefined";
        throw TorsionZeroError(msg.str());
    }
}

/// Shared jet assembly for the cylindrical focal formulas: P, Q, the
/// planar couple w = f''a' - f'a'', and the torsion numerator
/// f''' s'^3 K - <J(w), a'''>, everything at jet order 1 so that
/// first derivatives of P and Q fall out of the propagation.
struct CylindricalParts {
    Jet P;        // s'^2 + f'^2
    Jet Q;        // s'^6 K^2 + |w|^2
    Vec2 w;       // value part of f''a' - f'a''
    double turn;  // s'^3 K value
    double tau_num;
    double tau;
    double kappa;
    double speed;
};

CylindricalParts cylindrical_parts(const Jet2& base_jet, const Jet& f_jet, const Jet& K_jet,
                                   const Jet& s_dot_jet) {
    if (base_jet.order() < 3 || f_jet.order() < 3)
        throw InvalidArgument("cylindrical focal formulas need base and f jets of order >= 3");
    if (K_jet.order() < 1 || s_dot_jet.order() < 1)
        throw InvalidArgument("cylindrical focal formulas need K and s' jets of order >= 1");

    Jet2 a1 = base_jet.derivative();   // order 2
    Jet2 a2 = a1.derivative();         // order 1
    Jet2 a1t = a1.truncated(1);
    Jet fd1 = f_jet.derivative().truncated(1);
    Jet fd2 = f_jet.derivative().derivative();

    Jet K = K_jet.truncated(1);
    Jet s = s_dot_jet.truncated(1);

    CylindricalParts parts;
    parts.P = s * s + fd1 * fd1;

    Jet turn = s * s * s * K;  // s'^3 K
    Jet wx = fd2 * a1t.x - fd1 * a2.x;
    Jet wy = fd2 * a1t.y - fd1 * a2.y;
    parts.Q = turn * turn + wx * wx + wy * wy;

    parts.w = {wx.value(), wy.value()};
    parts.turn = turn.value();
    const Vec2 a3{base_jet.x[3], base_jet.y[3]};
    parts.tau_num = f_jet[3] * parts.turn - dot(j_rotate(parts.w), a3);
    parts.tau = parts.tau_num / parts.Q.value();
    parts.speed = std::sqrt(parts.P.value());
    parts.kappa = std::sqrt(parts.Q.value()) / (parts.speed * parts.speed * parts.speed);
    return parts;
}

void check_cylindrical_guards(const CylindricalParts& parts, const Guards& guards,
                              const CurveScale& scale) {
    if (!(parts.speed > guards.eps_reg * scale.speed)) {
        std::ostringstream msg;
        msg << "non-regular point: speed " << parts.speed;
        throw RegularityError(msg.str());
    }
    const double root_q = std::sqrt(parts.Q.value());
    if (!(root_q > guards.eps_flat * parts.speed * parts.speed * parts.speed * scale.extent)) {
        std::ostringstream msg;
        msg << "flat point: |g' x g''| = " << root_q;
        throw FlatnessError(msg.str());
    }
    check_torsion(parts.tau, parts.kappa, parts.speed, guards, scale);
}

} // namespace

FocalCurvatures focal_curvatures_general(const Jet& kappa_jet, double speed, double tau,
                                         const Guards& guards, const CurveScale& scale) {
    if (kappa_jet.order() < 1)
        throw InvalidArgument("focal_curvatures_general needs a kappa jet of order >= 1");
    const double kappa = kappa_jet.value();
    if (!(kappa > guards.eps_flat * scale.extent))
        throw FlatnessError("kappa numerically zero: focal curvatures undefined");
    check_torsion(tau, kappa, speed, guards, scale);

    FocalCurvatures fc;
    fc.c1 = 1.0 / kappa;
    fc.c2 = -kappa_jet[1] / (speed * kappa * kappa * tau);

    // Equivalent form c2 = (d(1/kappa)/dt) / (|g'| tau); the two must
    // agree to rounding or the propagation above is broken.
    Jet c1_jet = 1.0 / kappa_jet.truncated(1);
    double c2_alt = c1_jet[1] / (speed * tau);
    if (std::abs(c2_alt - fc.c2) > 1e-9 * (1.0 + std::abs(fc.c2)))
        throw Error("focal curvature consistency check failed between the two c2 forms");
    return fc;
}

FocalCurvatures focal_curvatures_cylindrical(const Jet2& base_jet, const Jet& f_jet,
                                             const Jet& K_jet, const Jet& s_dot_jet,
                                             const Guards& guards, const CurveScale& scale) {
    CylindricalParts parts = cylindrical_parts(base_jet, f_jet, K_jet, s_dot_jet);
    check_cylindrical_guards(parts, guards, scale);

    const double p = parts.P.value();
    const double q = parts.Q.value();
    const double root_q = std::sqrt(q);

    FocalCurvatures fc;
    fc.c1 = p * std::sqrt(p) / root_q;
    fc.c2 = (3.0 * q * parts.P[1] - p * parts.Q[1]) / (2.0 * root_q * parts.tau_num);
    return fc;
}

Vec3 focal_point(Vec3 gamma_t, const FrenetData& frame, double c1, double c2) {
    return gamma_t + c1 * frame.normal + c2 * frame.binormal;
}

GeneralizedFocal generalized_focal(const Jet2& base_jet, const Jet& f_jet, const Jet& K_jet,
                                   const Jet& s_dot_jet, const Guards& guards,
                                   const CurveScale& scale) {
    CylindricalParts parts = cylindrical_parts(base_jet, f_jet, K_jet, s_dot_jet);
    check_cylindrical_guards(parts, guards, scale);

    const double p = parts.P.value();
    const double root_p = std::sqrt(p);
    const double root_q = std::sqrt(parts.Q.value());
    const double c1 = p * root_p / root_q;
    const double c2 =
        (3.0 * parts.Q.value() * parts.P[1] - p * parts.Q[1]) / (2.0 * root_q * parts.tau_num);

    const Vec2 alpha{base_jet.x[0], base_jet.y[0]};
    const Vec2 a1{base_jet.x[1], base_jet.y[1]};
    const Vec2 a2{base_jet.x[2], base_jet.y[2]};
    const double fd1 = f_jet[1];
    const double fd2 = f_jet[2];
    const double s_dot = s_dot_jet.value();
    const double half_s2_prime = dot(a2, a1);  // d/dt(s'^2 / 2)

    const double denom = root_p * root_q;
    GeneralizedFocal out;
    out.beta = alpha + (c1 * (p * a2 - 0.5 * parts.P[1] * a1) - c2 * root_p * j_rotate(parts.w)) / denom;
    out.f_tilde = f_jet.value() +
                  (c1 * (fd2 * s_dot * s_dot - fd1 * half_s2_prime) + c2 * root_p * parts.turn) / denom;
    return out;
}

FocalData focal_data(const Jet3& lift_jets, const FrenetData& frame, const Jet2& base_jet,
                     const Jet& f_jet, const Guards& guards, const CurveScale& scale) {
    FocalCurvatures fc =
        focal_curvatures_general(kappa_jet_general(lift_jets), frame.speed, frame.tau, guards, scale);
    Vec3 gamma{lift_jets.x.value(), lift_jets.y.value(), lift_jets.z.value()};
    GeneralizedFocal gf = generalized_focal(base_jet, f_jet, signed_curvature_jet(base_jet),
                                            speed_jet(base_jet), guards, scale);
    FocalData out;
    out.c1 = fc.c1;
    out.c2 = fc.c2;
    out.center = focal_point(gamma, frame, fc.c1, fc.c2);
    out.beta = gf.beta;
    out.f_tilde = gf.f_tilde;
    return out;
}

} // namespace toro
