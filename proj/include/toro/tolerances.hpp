#pragma once

namespace toro {

/// Relative guard factors applied at every singularity detection site.
/// Each factor is multiplied by the relevant local scale before the
/// comparison; see the call sites for the exact guard expressions.
struct Guards {
    /// Regularity: a point is non-regular when speed <= eps_reg * speed scale.
    double eps_reg = 1e-9;
    /// Flatness: the frame is undefined when |gamma' x gamma''| <=
    /// eps_flat * speed^3 * extent.
    double eps_flat = 1e-9;
    /// Torsion: c2 is undefined when |tau| <= eps_tau * kappa^2 * speed * extent.
    double eps_tau = 1e-9;
    /// Torus annulus guard band: eps_dom * (a+b)^2 on rho^2 at both edges.
    double eps_dom = 1e-9;
    /// Finite-difference steps: low order (1-2) and high order (3-4).
    double fd_step_low = 1e-5;
    double fd_step_high = 1e-3;
};

/// Per-curve magnitudes probed once at construction, used to make the
/// guards scale-relative.
struct CurveScale {
    /// max ||alpha'|| (or ||gamma'||) over a coarse probe grid.
    double speed = 1.0;
    /// max ||alpha|| (or ||gamma||) over the same grid.
    double extent = 1.0;
};

} // namespace toro
