#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toro/focal.hpp"
#include "toro/frenet.hpp"
#include "toro/lift.hpp"
#include "toro/tolerances.hpp"

namespace toro {

/// Mutually exclusive sample verdicts; when several singularities apply
/// the priority is domain > near_cusp > flat > torsion_zero.
enum class SampleStatus { Ok, NearCusp, Flat, TorsionZero, Domain };

const char* to_string(SampleStatus status);

/// Everything the pipeline knows about one parameter value.  Numeric
/// fields are meaningful only when status == Ok.
struct SampleRecord {
    double t = 0.0;
    SampleStatus status = SampleStatus::Ok;
    double alpha_x = 0.0, alpha_y = 0.0;
    double f = 0.0;
    Vec3 gamma;
    double s_dot = 0.0, K = 0.0;
    Vec3 T, N, B;
    double kappa = 0.0, tau = 0.0;
    double c1 = 0.0, c2 = 0.0;
    Vec3 C;          ///< osculating-sphere center
    Vec2 beta;       ///< generalized focal curve point
    double f_tilde = 0.0;
};

struct SampleSeries {
    std::vector<SampleRecord> records;
    /// Maximal [begin, end) runs of Ok records; exports draw one
    /// polyline per arc.
    std::vector<std::pair<int, int>> arcs;
};

/// Half-width of the excluded parameter band around each cusp.
double cusp_guard_width(double period);

/// Full pipeline over a uniform n-point grid spanning the lift's
/// domain (endpoints included).  Points inside a cusp guard band are
/// reported, not computed.  Per-point work is independent, so the grid
/// fans out across threads; records come back ordered by t regardless
/// of scheduling.
SampleSeries sample_lift(const CylindricalLift& lift, const std::vector<double>& cusp_params,
                         int samples, const Guards& guards = {}, bool parallel = true);

/// The pipeline at a single parameter (status captured, never thrown).
SampleRecord sample_point(const CylindricalLift& lift, double t,
                          const std::vector<double>& cusp_params, double guard_width,
                          const Guards& guards);

} // namespace toro
