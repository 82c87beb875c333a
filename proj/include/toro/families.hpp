#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toro/lift.hpp"
#include "toro/plane_curve.hpp"

namespace toro {

enum class FamilyKind { Epicycloid, Hypocycloid, HelixProjection };

/// Parameters of a built-in closed plane curve.
///
/// Epicycloid / hypocycloid: fixed circle radius R, rolling circle
/// radius r, parameter domain [0, 2k*pi] where k is the smallest integer
/// closing the curve (the reduced denominator of r/R) unless overridden.
/// Helix projection: winding count n over the paired torus.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Epicycloid;
    double R = 0.0;
    double r = 0.0;
    int n = 0;
    int k = 0;  ///< period multiplier override; 0 = derive from r/R
};

/// Result of pairing a family with a torus: the compatibility verdict,
/// boundary-touch flags, and the exact singular-parameter inventory.
struct TorusCompatibility {
    bool constraint_ok = false;
    bool touches_outer = false;  ///< epicycloid touches x^2+y^2 = (a+b)^2
    bool touches_inner = false;  ///< hypocycloid touches x^2+y^2 = (a-b)^2
    std::vector<double> cusp_params;  ///< sorted, includes both endpoints
    double period = 0.0;
};

/// Construct the plane curve of a family spec.  The helix projection
/// needs the paired torus for its radii.
PlaneCurve family_curve(const FamilySpec& spec,
                        const std::optional<TorusSpec>& torus = std::nullopt);

/// Pair a family with a torus: verdict, touch flags, cusp inventory.
/// Incompatibility is a result, not an error.
TorusCompatibility torus_compat(const FamilySpec& spec, const TorusSpec& torus);

/// Closed-form z component of the toroidal lift for the four named
/// ratios (cardioid, nephroid, deltoid, astroid), used to cross-check
/// the generic jet-propagated height.  Throws outside the four named
/// ratios, and at/beyond cusps where the radicand is non-positive.
double toroidal_z_closed_form(const FamilySpec& spec, const TorusSpec& torus, double t);

struct HelixFocalPoint {
    double x_beta;
    double y_beta;
    double f_tilde;
};

/// Closed form of the focal curve of the toroidal helix, rational in
/// trigonometric functions of t with a shared denominator.  Throws when
/// the denominator vanishes at t.
HelixFocalPoint helix_focal_closed_form(double a, double b, int n, double t);

/// A named configuration reproducing one of the reference ratio choices:
/// family ratios plus the matching torus, so runs are one flag.
struct Preset {
    std::string name;
    FamilyKind kind = FamilyKind::Epicycloid;
    double ratio_R_over_r = 1.0;  ///< R = ratio * r (cycloid families)
    double r = 1.0;               ///< default rolling radius
    double torus_a_over_r = 1.0;  ///< a = factor * r
    double torus_b_over_r = 1.0;  ///< b = factor * r
    int n = 0;                    ///< helix winding count
    double a = 0.0;               ///< helix torus radii (absolute)
    double b = 0.0;
};

const std::vector<Preset>& all_presets();
const Preset* find_preset(const std::string& name);

/// Family spec and torus realized from a preset; r (cycloids) or a, b, n
/// (helix) may be overridden.
FamilySpec preset_family(const Preset& preset, std::optional<double> r_override = std::nullopt,
                         std::optional<int> n_override = std::nullopt);
TorusSpec preset_torus(const Preset& preset, std::optional<double> r_override = std::nullopt,
                       std::optional<double> a_override = std::nullopt,
                       std::optional<double> b_override = std::nullopt);

/// The fully wired lift: torus-branch height for the cycloid families,
/// the explicit smooth height b*sin(n t) for the helix (its projection
/// touches both torus equators, where the branch form is not smooth).
CylindricalLift preset_lift(const Preset& preset, HeightBranch branch = HeightBranch::Upper,
                            const Guards& guards = {}, std::optional<double> r_override = std::nullopt,
                            std::optional<double> a_override = std::nullopt,
                            std::optional<double> b_override = std::nullopt,
                            std::optional<int> n_override = std::nullopt);

/// Explicit toroidal-helix lift over torus (a, b) winding n times.
CylindricalLift helix_lift(double a, double b, int n);

} // namespace toro
