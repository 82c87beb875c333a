#pragma once

#include <map>
#include <string>
#include <vector>

#include "toro/families.hpp"
#include "toro/tolerances.hpp"

namespace toro {

/// Outcome of one verification check: the worst deviation observed, the
/// tolerance it was held to, and where the worst case sat.
struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double worst_t = 0.0;
    std::string note;
    double elapsed_seconds = 0.0;
};

struct CheckOptions {
    Guards guards;
    int cross_path_samples = 512;   ///< interior grid for the dual-route checks
    int fd_points = 64;             ///< grid for the differentiation-kernel checks
    int helix_samples = 1000;       ///< closed-form focal sweep
    int cusp_scan_nodes = 4096;     ///< singularity detector resolution
    int fuzz_points = 10000;        ///< near-boundary fuzz size
    /// Per-check tolerance overrides keyed by check name.
    std::map<std::string, double> tolerance_overrides;
};

/// Every check that applies to the preset, most fundamental first.
/// Cross-path checks compare the definitional formulas against the
/// closed forms expressed through the base curve; they are the
/// artifact's central validation.
std::vector<CheckResult> run_preset_checks(const Preset& preset, const CheckOptions& options = {});

/// Exact jet propagation on polynomials of degree <= 4 (seeded random
/// coefficients), independent of any preset.
CheckResult check_polynomial_jets(const CheckOptions& options = {});

/// Count of distinct cusps per period (t = 0 and t = period identified).
int distinct_cusp_count(const TorusCompatibility& compat);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace toro
