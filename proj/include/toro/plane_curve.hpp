#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "toro/jet.hpp"
#include "toro/tolerances.hpp"
#include "toro/vec.hpp"

namespace toro {

/// Rotation by pi/2 counterclockwise: (p1, p2) -> (-p2, p1).
inline Vec2 j_rotate(Vec2 v) { return {-v.y, v.x}; }

/// Jet-valued variant, applied coefficientwise.
inline Jet2 j_rotate(const Jet2& v) { return {-v.y, v.x}; }

/// Regular C^3 plane curve alpha(t) = (x(t), y(t)), evaluated through
/// jets at any order up to 4.  Immutable after construction; evaluation
/// is reentrant and safe to call concurrently.
class PlaneCurve {
public:
    using Evaluator = std::function<Jet2(double t, int order)>;

    PlaneCurve(Evaluator evaluator, double t_min, double t_max,
               std::optional<double> period = std::nullopt, std::string label = "curve");

    /// Component jets of x and y at t.
    Jet2 jets(double t, int order) const;

    Vec2 point(double t) const;

    double t_min() const noexcept { return t_min_; }
    double t_max() const noexcept { return t_max_; }
    const std::optional<double>& period() const noexcept { return period_; }
    const std::string& label() const noexcept { return label_; }

    /// Magnitudes probed over a coarse grid at construction; all guards
    /// are relative to these.
    const CurveScale& scale() const noexcept { return scale_; }

private:
    Evaluator evaluator_;
    double t_min_;
    double t_max_;
    std::optional<double> period_;
    std::string label_;
    CurveScale scale_;
};

/// Pointwise plane-curve invariants at a regular parameter.
struct PlaneInvariants {
    double s_dot = 0.0;                 ///< arc-length prime ||alpha'||
    double K = 0.0;                     ///< signed curvature
    std::optional<double> radius;       ///< 1/K, absent when K == 0
    bool regular = false;
};

/// Signed curvature K = <alpha'', J alpha'> / ||alpha'||^3 together with
/// the speed and curvature radius.  Throws RegularityError at non-regular
/// parameters (speed below the guard).
PlaneInvariants signed_curvature(const PlaneCurve& curve, double t, const Guards& guards = {});

/// Speed ||alpha'|| as a jet, one order below the input jets.
Jet speed_jet(const Jet2& base);

/// Signed curvature as a jet, two orders below the input jets.  The
/// input must carry at least order 2 (order 3 when the derivative of K
/// is needed downstream).
Jet signed_curvature_jet(const Jet2& base);

} // namespace toro
