#include "toro/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace toro {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Smallest q <= 64 with r/R = p/q to within 1e-9; the curve closes
/// after q turns of the rolling angle.
int closure_multiplier(double r, double R) {
    double m = r / R;
    for (int q = 1; q <= 64; ++q) {
        double p = std::round(m * q);
        if (p >= 1.0 && std::abs(m * q - p) <= 1e-9 * q) return q;
    }
    throw InvalidArgument("r/R is not a small rational: the curve does not close within 64 turns");
}

void check_cycloid_params(const FamilySpec& spec) {
    if (!(spec.R > 0.0 && spec.r > 0.0))
        throw InvalidArgument("cycloid families require R > 0 and r > 0");
    if (spec.kind == FamilyKind::Hypocycloid && !(spec.R > spec.r))
        throw InvalidArgument("hypocycloid requires R > r");
}

bool nearly(double lhs, double rhs, double scale) {
    return std::abs(lhs - rhs) <= 1e-9 * scale;
}

} // namespace

PlaneCurve family_curve(const FamilySpec& spec, const std::optional<TorusSpec>& torus) {
    switch (spec.kind) {
        case FamilyKind::Epicycloid: {
            check_cycloid_params(spec);
            const double m = spec.r / spec.R;
            const double rim = spec.r + spec.R;
            const double r = spec.r;
            int k = spec.k > 0 ? spec.k : closure_multiplier(spec.r, spec.R);
            double period = 2.0 * kPi * k;
            auto eval = [m, rim, r](double t, int order) {
                Jet tt = Jet::variable(t, order);
                Jet x = rim * cos(m * tt) - r * cos((m + 1.0) * tt);
                Jet y = rim * sin(m * tt) - r * sin((m + 1.0) * tt);
                return Jet2{x, y};
            };
            return PlaneCurve(eval, 0.0, period, period, "epicycloid");
        }
        case FamilyKind::Hypocycloid: {
            check_cycloid_params(spec);
            const double m = spec.r / spec.R;
            const double hub = spec.R - spec.r;
            const double r = spec.r;
            int k = spec.k > 0 ? spec.k : closure_multiplier(spec.r, spec.R);
            double period = 2.0 * kPi * k;
            auto eval = [m, hub, r](double t, int order) {
                Jet tt = Jet::variable(t, order);
                Jet x = r * cos((1.0 - m) * tt) + hub * cos(m * tt);
                Jet y = hub * sin(m * tt) - r * sin((1.0 - m) * tt);
                return Jet2{x, y};
            };
            return PlaneCurve(eval, 0.0, period, period, "hypocycloid");
        }
        case FamilyKind::HelixProjection: {
            if (!torus) throw InvalidArgument("helix projection needs the paired torus");
            if (spec.n <= 0) throw InvalidArgument("helix projection requires n > 0");
            const double a = torus->a;
            const double b = torus->b;
            const double n = spec.n;
            auto eval = [a, b, n](double t, int order) {
                Jet tt = Jet::variable(t, order);
                Jet radius = a + b * cos(n * tt);
                return Jet2{cos(tt) * radius, sin(tt) * radius};
            };
            return PlaneCurve(eval, 0.0, 2.0 * kPi, 2.0 * kPi, "helix-projection");
        }
    }
    throw InvalidArgument("unknown family kind");
}

TorusCompatibility torus_compat(const FamilySpec& spec, const TorusSpec& torus) {
    TorusCompatibility compat;
    const double a = torus.a;
    const double b = torus.b;

    if (spec.kind == FamilyKind::HelixProjection) {
        compat.constraint_ok = spec.n > 0;
        compat.period = 2.0 * kPi;
        return compat;  // regular everywhere: no cusps
    }

    check_cycloid_params(spec);
    int k = spec.k > 0 ? spec.k : closure_multiplier(spec.r, spec.R);
    compat.period = 2.0 * kPi * k;

    const double outer_reach = spec.kind == FamilyKind::Epicycloid ? spec.R + 2.0 * spec.r : spec.R;
    if (spec.kind == FamilyKind::Epicycloid) {
        compat.constraint_ok = nearly(spec.R, a - b, a) && outer_reach <= a + b + 1e-9 * a;
        compat.touches_outer = nearly(outer_reach, a + b, a);
    } else {
        const double inner_reach = std::abs(2.0 * spec.r - spec.R);
        compat.constraint_ok =
            inner_reach >= a - b - 1e-9 * a && spec.R <= a + b + 1e-9 * a;
        compat.touches_inner = nearly(inner_reach, a - b, a);
    }

    // The rolling-contact parameterization loses regularity exactly at
    // t = 0 mod 2*pi; a boundary touch adds the odd multiples of pi.
    for (int i = 0; i <= k; ++i) compat.cusp_params.push_back(2.0 * kPi * i);
    if (compat.touches_outer || compat.touches_inner)
        for (int i = 0; i < k; ++i) compat.cusp_params.push_back(kPi * (2 * i + 1));
    std::sort(compat.cusp_params.begin(), compat.cusp_params.end());
    return compat;
}

double toroidal_z_closed_form(const FamilySpec& spec, const TorusSpec& torus, double t) {
    const double a = torus.a;
    const double r = spec.r;
    double half_width = 0.0;  // |a - R| for epicycloids, R - a for hypocycloids
    double base_dist = 0.0;   // ||alpha(t)||

    if (spec.kind == FamilyKind::Epicycloid && nearly(spec.R, spec.r, spec.R)) {
        half_width = a - r;
        base_dist = r * std::sqrt(5.0 - 4.0 * std::cos(t));
    } else if (spec.kind == FamilyKind::Epicycloid && nearly(spec.R, 2.0 * spec.r, spec.R)) {
        half_width = a - 2.0 * r;
        base_dist = r * std::sqrt(10.0 - 6.0 * std::cos(t));
    } else if (spec.kind == FamilyKind::Hypocycloid && nearly(2.0 * spec.R, 3.0 * spec.r, spec.R)) {
        half_width = 1.5 * r - a;
        base_dist = 0.5 * r * std::sqrt(5.0 + 4.0 * std::cos(t));
    } else if (spec.kind == FamilyKind::Hypocycloid && nearly(spec.R, 4.0 * spec.r, spec.R)) {
        half_width = 4.0 * r - a;
        base_dist = r * std::sqrt(10.0 + 6.0 * std::cos(t));
    } else {
        throw InvalidArgument("no closed-form z for this family ratio");
    }

    double gap = a - base_dist;
    double radicand = half_width * half_width - gap * gap;
    if (!(radicand > 0.0)) {
        std::ostringstream msg;
        msg << "closed-form z undefined at t = " << t << " (radicand " << radicand << ")";
        TorusDomainError err(msg.str(), radicand);
        err.set_param(t);
        throw err;
    }
    return std::sqrt(radicand);
}

HelixFocalPoint helix_focal_closed_form(double a, double b, int n, double t) {
    const double n2 = double(n) * n;
    const double n4 = n2 * n2;
    const double ct = std::cos(t), st = std::sin(t);
    const double cnt = std::cos(n * t), snt = std::sin(n * t);
    const double c2nt = std::cos(2.0 * n * t), c3nt = std::cos(3.0 * n * t);

    const double lead = 4.0 * a * a * (n2 - 1.0) - b * b * (8.0 * n4 + 13.0 * n2 + 3.0);
    const double den = lead * cnt +
                       b * (4.0 * a * (n4 - 1.0) - 4.0 * a * (2.0 * n2 + 1.0) * c2nt +
                            b * (n2 - 1.0) * c3nt);
    const double den_scale = std::abs(lead) + std::abs(b) * (4.0 * a * (n4 - 1.0) +
                                                            4.0 * a * (2.0 * n2 + 1.0) +
                                                            std::abs(b) * (n2 - 1.0));
    if (std::abs(den) <= 1e-12 * std::max(den_scale, 1.0)) {
        std::ostringstream msg;
        msg << "focal closed form singular at t = " << t;
        InvalidArgument err(msg.str());
        err.set_param(t);
        throw err;
    }

    const double radial = a * (n2 - 1.0) - b * (2.0 * n2 + 1.0) * cnt;
    HelixFocalPoint p;
    p.x_beta = 4.0 * a * b * n2 * (ct * radial + 3.0 * b * n * st * snt) / den;
    p.y_beta = 4.0 * a * b * n2 * (st * radial - 3.0 * b * n * ct * snt) / den;
    p.f_tilde = 2.0 * a * snt *
                (-2.0 * a * a * (n2 - 1.0) + 4.0 * a * b * (2.0 * n2 + 1.0) * cnt -
                 b * b * (n2 - 1.0) * c2nt + b * b * (11.0 * n2 + 1.0)) /
                den;
    return p;
}

const std::vector<Preset>& all_presets() {
    // Fixed ratios pin the torus to the family, so each name is a
    // complete, reproducible setup; r only sets the overall size.
    static const std::vector<Preset> presets = {
        {"cardioid-strict", FamilyKind::Epicycloid, 1.0, 1.0, 4.0, 3.0, 0, 0.0, 0.0},
        {"cardioid-touch", FamilyKind::Epicycloid, 1.0, 1.0, 2.0, 1.0, 0, 0.0, 0.0},
        {"nephroid-strict", FamilyKind::Epicycloid, 2.0, 0.5, 6.0, 4.0, 0, 0.0, 0.0},
        {"nephroid-touch", FamilyKind::Epicycloid, 2.0, 1.0, 3.0, 1.0, 0, 0.0, 0.0},
        {"deltoid-strict", FamilyKind::Hypocycloid, 1.5, 10.0, 0.9, 0.6, 0, 0.0, 0.0},
        {"deltoid-touch", FamilyKind::Hypocycloid, 1.5, 2.0, 1.0, 0.5, 0, 0.0, 0.0},
        {"astroid-strict", FamilyKind::Hypocycloid, 4.0, 0.75, 8.0 / 3.0, 4.0 / 3.0, 0, 0.0, 0.0},
        {"astroid-touch", FamilyKind::Hypocycloid, 4.0, 1.0, 3.0, 1.0, 0, 0.0, 0.0},
        {"helix", FamilyKind::HelixProjection, 0.0, 0.0, 0.0, 0.0, 12, 4.0, 1.0},
    };
    return presets;
}

const Preset* find_preset(const std::string& name) {
    for (const Preset& p : all_presets())
        if (p.name == name) return &p;
    return nullptr;
}

FamilySpec preset_family(const Preset& preset, std::optional<double> r_override,
                         std::optional<int> n_override) {
    FamilySpec spec;
    spec.kind = preset.kind;
    if (preset.kind == FamilyKind::HelixProjection) {
        spec.n = n_override.value_or(preset.n);
    } else {
        spec.r = r_override.value_or(preset.r);
        spec.R = preset.ratio_R_over_r * spec.r;
    }
    return spec;
}

TorusSpec preset_torus(const Preset& preset, std::optional<double> r_override,
                       std::optional<double> a_override, std::optional<double> b_override) {
    if (preset.kind == FamilyKind::HelixProjection)
        return TorusSpec(a_override.value_or(preset.a), b_override.value_or(preset.b));
    double r = r_override.value_or(preset.r);
    return TorusSpec(a_override.value_or(preset.torus_a_over_r * r),
                     b_override.value_or(preset.torus_b_over_r * r));
}

CylindricalLift preset_lift(const Preset& preset, HeightBranch branch, const Guards& guards,
                            std::optional<double> r_override, std::optional<double> a_override,
                            std::optional<double> b_override, std::optional<int> n_override) {
    TorusSpec torus = preset_torus(preset, r_override, a_override, b_override);
    if (preset.kind == FamilyKind::HelixProjection)
        return helix_lift(torus.a, torus.b, n_override.value_or(preset.n));
    FamilySpec spec = preset_family(preset, r_override, n_override);
    PlaneCurve base = family_curve(spec);
    return CylindricalLift::over_torus(std::move(base), torus, branch, guards);
}

CylindricalLift helix_lift(double a, double b, int n) {
    TorusSpec torus(a, b);
    FamilySpec spec;
    spec.kind = FamilyKind::HelixProjection;
    spec.n = n;
    PlaneCurve base = family_curve(spec, torus);
    auto height = [b, n](double t, int order) {
        Jet tt = Jet::variable(t, order);
        return b * sin(double(n) * tt);
    };
    return CylindricalLift(std::move(base), std::move(height), "helix");
}

} // namespace toro
