#pragma once

#include "toro/jet.hpp"
#include "toro/plane_curve.hpp"
#include "toro/tolerances.hpp"
#include "toro/vec.hpp"

namespace toro {

/// Frenet-Serret data of a space curve at one parameter: the orthonormal
/// right-handed frame (tangent, normal, binormal), curvature, torsion,
/// and the parametric speed.
struct FrenetData {
    Vec3 tangent;
    Vec3 normal;
    Vec3 binormal;
    double kappa = 0.0;
    double tau = 0.0;
    double speed = 0.0;
};

/// Frenet data from the definitional formulas
///   T = g'/|g'|, B = (g' x g'')/|g' x g''|, N = ((g' x g'') x g')/|...|,
///   kappa = |g' x g''|/|g'|^3, tau = det[g' g'' g''']/|g' x g''|^2.
/// Requires component jets of order >= 3.  Throws RegularityError when
/// the speed is below the guard and FlatnessError when |g' x g''| is.
FrenetData frenet_general(const Jet3& jets, const Guards& guards = {},
                          const CurveScale& scale = {});

/// kappa of the space curve as a jet (two orders below the input), built
/// entirely by jet propagation so its derivative is available to the
/// focal-curvature formulas.
Jet kappa_jet_general(const Jet3& jets);

/// Curvature of the cylindrical lift from the base-curve jets alone:
///   kappa = sqrt(<a'', Ja'>^2 + |f''a' - f'a''|^2) / (s'^2 + f'^2)^(3/2).
/// No 3D cross products are formed.  Requires order >= 2.
double kappa_cylindrical(const Jet2& base_jet, const Jet& f_jet, const Guards& guards = {},
                         const CurveScale& scale = {});

/// Torsion of the cylindrical lift from the base-curve jets alone:
///   tau = (f'''<a'',Ja'> + f''<-Ja',a'''> + f'<Ja'',a'''>)
///         / (<a'',Ja'>^2 + |f''a' - f'a''|^2).
/// Requires order >= 3.
double tau_cylindrical(const Jet2& base_jet, const Jet& f_jet, const Guards& guards = {},
                       const CurveScale& scale = {});

/// Full Frenet data of the lift expressed through the base curve's
/// signed curvature K and arc-length prime s': the tangent follows the
/// lift derivative a' + f'e3, the binormal the identity
/// g' x g'' = s'^3 K e3 - J(f''a' - f'a''), and the normal closes the
/// right-handed frame.  kappa and tau are filled from the closed forms
/// above.  Requires order >= 3.
FrenetData frame_cylindrical(const Jet2& base_jet, const Jet& f_jet, double K, double s_dot,
                             const Guards& guards = {}, const CurveScale& scale = {});

} // namespace toro
