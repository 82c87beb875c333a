#pragma once

#include "toro/frenet.hpp"
#include "toro/jet.hpp"
#include "toro/tolerances.hpp"
#include "toro/vec.hpp"

namespace toro {

/// Focal data of a space curve at one parameter: the focal curvatures
/// placing the osculating-sphere center in the (N, B) plane, the center
/// itself, and its planar projection + height (the generalized focal
/// curve of the base).
struct FocalData {
    double c1 = 0.0;
    double c2 = 0.0;
    Vec3 center;     ///< osculating-sphere center
    Vec2 beta;       ///< planar projection of the center
    double f_tilde = 0.0;  ///< height of the center
};

struct FocalCurvatures {
    double c1 = 0.0;
    double c2 = 0.0;
};

/// Focal curvatures from the definitional formulas
///   c1 = 1/kappa,  c2 = -kappa' / (|g'| kappa^2 tau),
/// with the equivalent form c2 = (d(1/kappa)/dt) / (|g'| tau) evaluated
/// as an internal consistency check.  kappa and its derivative come in
/// as a jet of order >= 1.  Throws TorsionZeroError below the torsion
/// guard and FlatnessError when kappa is numerically zero.
FocalCurvatures focal_curvatures_general(const Jet& kappa_jet, double speed, double tau,
                                         const Guards& guards = {}, const CurveScale& scale = {});

/// Focal curvatures of the cylindrical lift straight from the base
/// curve: with P = s'^2 + f'^2 and Q = s'^6 K^2 + |f''a' - f'a''|^2,
///   c1 = P^(3/2) / sqrt(Q)
///   c2 = (3 Q P' - P Q') / (2 sqrt(Q) (f''' s'^3 K - <J(f''a'-f'a''), a'''>)).
/// P' and Q' are obtained by jet propagation of the complete
/// sub-expressions.  Requires base and f jets of order >= 3 and K, s'
/// jets of order >= 1.
FocalCurvatures focal_curvatures_cylindrical(const Jet2& base_jet, const Jet& f_jet,
                                             const Jet& K_jet, const Jet& s_dot_jet,
                                             const Guards& guards = {},
                                             const CurveScale& scale = {});

/// Osculating-sphere center C = gamma + c1 N + c2 B.
Vec3 focal_point(Vec3 gamma_t, const FrenetData& frame, double c1, double c2);

struct GeneralizedFocal {
    Vec2 beta;
    double f_tilde = 0.0;
};

/// Planar projection and height of the focal curve expressed through the
/// base curve alone; componentwise equal to focal_point of the lift.
GeneralizedFocal generalized_focal(const Jet2& base_jet, const Jet& f_jet, const Jet& K_jet,
                                   const Jet& s_dot_jet, const Guards& guards = {},
                                   const CurveScale& scale = {});

/// Both focal routes assembled at one parameter: curvatures and the
/// sphere center from the definitional route, the projection and
/// height from the base-curve route.  The center and (beta, f_tilde)
/// coincide up to rounding; keeping both routes visible is the point.
FocalData focal_data(const Jet3& lift_jets, const FrenetData& frame, const Jet2& base_jet,
                     const Jet& f_jet, const Guards& guards = {}, const CurveScale& scale = {});

} // namespace toro
