#include "toro/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "toro/plane_curve.hpp"

namespace toro {

const char* to_string(SampleStatus status) {
    switch (status) {
        case SampleStatus::Ok: return "ok";
        case SampleStatus::NearCusp: return "near_cusp";
        case SampleStatus::Flat: return "flat";
        case SampleStatus::TorsionZero: return "torsion_zero";
        case SampleStatus::Domain: return "domain";
    }
    return "?";
}

double cusp_guard_width(double period) { return 1e-4 * period; }

namespace {

bool in_guard_band(double t, const std::vector<double>& cusps, double width) {
    for (double c : cusps)
        if (std::abs(t - c) < width) return true;
    return false;
}

} // namespace

SampleRecord sample_point(const CylindricalLift& lift, double t,
                          const std::vector<double>& cusp_params, double guard_width,
                          const Guards& guards) {
    SampleRecord rec;
    rec.t = t;

    const bool guarded = in_guard_band(t, cusp_params, guard_width);
    try {
        if (guarded) {
            // Probe the height anyway: a domain violation outranks the
            // guard-band verdict.
            lift.height_jet(t, 0);
            rec.status = SampleStatus::NearCusp;
            return rec;
        }

        const CurveScale& scale = lift.scale();
        Jet3 j3 = lift_jet3(lift, t, 3);
        rec.alpha_x = j3.x.value();
        rec.alpha_y = j3.y.value();
        rec.f = j3.z.value();
        rec.gamma = {rec.alpha_x, rec.alpha_y, rec.f};

        PlaneInvariants plane = signed_curvature(lift.base(), t, guards);
        rec.s_dot = plane.s_dot;
        rec.K = plane.K;

        FrenetData frame = frenet_general(j3, guards, scale);
        rec.T = frame.tangent;
        rec.N = frame.normal;
        rec.B = frame.binormal;
        rec.kappa = frame.kappa;
        rec.tau = frame.tau;

        Jet2 base = lift.base().jets(t, 3);
        Jet f_jet = lift.height_jet(t, 3);
        FocalData focal = focal_data(j3, frame, base, f_jet, guards, scale);
        rec.c1 = focal.c1;
        rec.c2 = focal.c2;
        rec.C = focal.center;
        rec.beta = focal.beta;
        rec.f_tilde = focal.f_tilde;

        rec.status = SampleStatus::Ok;
    } catch (const TorusDomainError&) {
        rec.status = SampleStatus::Domain;
    } catch (const RegularityError&) {
        rec.status = SampleStatus::NearCusp;
    } catch (const FlatnessError&) {
        rec.status = SampleStatus::Flat;
    } catch (const TorsionZeroError&) {
        rec.status = SampleStatus::TorsionZero;
    } catch (const Error&) {
        // any other evaluation failure (sqrt/division domain errors in
        // user expressions) counts as a domain verdict; it must never
        // escape into the sampling threads
        rec.status = SampleStatus::Domain;
    }
    if (rec.status != SampleStatus::Ok && guarded && rec.status != SampleStatus::Domain)
        rec.status = SampleStatus::NearCusp;
    return rec;
}

SampleSeries sample_lift(const CylindricalLift& lift, const std::vector<double>& cusp_params,
                         int samples, const Guards& guards, bool parallel) {
    if (samples < 2) throw InvalidArgument("sampling needs at least 2 points");

    const double lo = lift.base().t_min();
    const double hi = lift.base().t_max();
    const double width = cusp_guard_width(hi - lo);

    SampleSeries series;
    series.records.resize(samples);

    auto worker = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            double t = lo + (hi - lo) * i / (samples - 1);
            series.records[i] = sample_point(lift, t, cusp_params, width, guards);
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    int threads = parallel ? static_cast<int>(std::min<unsigned>(hw ? hw : 1, 8)) : 1;
    if (threads > 1 && samples >= 4 * threads) {
        std::vector<std::thread> pool;
        int chunk = (samples + threads - 1) / threads;
        for (int k = 0; k < threads; ++k) {
            int begin = k * chunk;
            int end = std::min(samples, begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    } else {
        worker(0, samples);
    }

    for (int i = 0; i < samples;) {
        if (series.records[i].status == SampleStatus::Ok) {
            int j = i;
            while (j < samples && series.records[j].status == SampleStatus::Ok) ++j;
            series.arcs.emplace_back(i, j);
            i = j;
        } else {
            ++i;
        }
    }
    return series;
}

} // namespace toro
