#include "toro/plane_curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace toro {

namespace {

CurveScale probe_scale(const PlaneCurve::Evaluator& evaluator, double t_min, double t_max) {
    // 64 interior probes; cusps contribute small speeds and cannot
    // dominate the max, so landing near one is harmless.
    constexpr int probes = 64;
    CurveScale scale{0.0, 0.0};
    for (int i = 0; i < probes; ++i) {
        double t = t_min + (t_max - t_min) * (i + 0.5) / probes;
        try {
            Jet2 j = evaluator(t, 1);
            scale.speed = std::max(scale.speed, std::hypot(j.x[1], j.y[1]));
            scale.extent = std::max(scale.extent, std::hypot(j.x[0], j.y[0]));
        } catch (const Error&) {
            // expressions may be partial on the domain; probes that
            // fail contribute nothing
        }
    }
    if (scale.speed == 0.0) scale.speed = 1.0;
    if (scale.extent == 0.0) scale.extent = 1.0;
    return scale;
}

} // namespace

PlaneCurve::PlaneCurve(Evaluator evaluator, double t_min, double t_max,
                       std::optional<double> period, std::string label)
    : evaluator_(std::move(evaluator)),
      t_min_(t_min),
      t_max_(t_max),
      period_(period),
      label_(std::move(label)) {
    if (!(t_max_ > t_min_)) throw InvalidArgument("plane curve needs a nonempty domain");
    scale_ = probe_scale(evaluator_, t_min_, t_max_);
}

Jet2 PlaneCurve::jets(double t, int order) const {
    if (t < t_min_ - 1e-12 || t > t_max_ + 1e-12) {
        std::ostringstream msg;
        msg << "parameter " << t << " outside curve domain [" << t_min_ << ", " << t_max_ << "]";
        InvalidArgument err(msg.str());
        err.set_param(t);
        throw err;
    }
    return evaluator_(t, order);
}

Vec2 PlaneCurve::point(double t) const {
    Jet2 j = jets(t, 0);
    return {j.x.value(), j.y.value()};
}

PlaneInvariants signed_curvature(const PlaneCurve& curve, double t, const Guards& guards) {
    Jet2 j = curve.jets(t, 2);
    Vec2 d1{j.x[1], j.y[1]};
    Vec2 d2{j.x[2], j.y[2]};

    PlaneInvariants inv;
    inv.s_dot = norm(d1);
    inv.regular = inv.s_dot > guards.eps_reg * curve.scale().speed;
    if (!inv.regular) {
        std::ostringstream msg;
        msg << "non-regular point: speed " << inv.s_dot << " at t = " << t;
        RegularityError err(msg.str());
        err.set_param(t);
        throw err;
    }
    inv.K = dot(d2, j_rotate(d1)) / (inv.s_dot * inv.s_dot * inv.s_dot);
    if (inv.K != 0.0) inv.radius = 1.0 / inv.K;
    return inv;
}

Jet speed_jet(const Jet2& base) {
    Jet2 d1 = base.derivative();
    return sqrt(d1.x * d1.x + d1.y * d1.y);
}

Jet signed_curvature_jet(const Jet2& base) {
    if (base.order() < 2)
        throw InvalidArgument("signed_curvature_jet needs jets of order >= 2");
    Jet2 d1 = base.derivative();
    Jet2 d2 = d1.derivative();
    int n = d2.order();
    Jet2 d1t = d1.truncated(n);
    Jet2 jd1 = j_rotate(d1t);
    Jet numerator = d2.x * jd1.x + d2.y * jd1.y;
    Jet s = sqrt(d1t.x * d1t.x + d1t.y * d1t.y);
    return numerator / (s * s * s);
}

} // namespace toro
