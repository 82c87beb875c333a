#pragma once

#include <string>
#include <vector>

#include "toro/pipeline.hpp"

namespace toro {

/// Shortest round-trip decimal representation of a double, capped at 17
/// significant digits.  All emitted files share this formatter so CSV
/// and JSON encode byte-identical values.
std::string format_double(double v);

/// Fixed, versioned CSV: a version comment line, one header row, one row
/// per record.  Numeric cells of non-ok records are left empty.
std::string to_csv(const SampleSeries& series);

/// JSON document with the same fields in the same order; numeric fields
/// of non-ok records are null.
std::string to_json(const SampleSeries& series, const std::string& label);

struct SvgOptions {
    double margin_fraction = 0.05;
    std::string base_color = "red";     ///< plane curve alpha
    std::string focal_color = "purple"; ///< generalized focal curve beta
};

/// Plane figure: the base curve and its generalized focal curve, one
/// path per arc.  Throws when there is no ok record to draw.
std::string to_svg(const SampleSeries& series, const SvgOptions& options = {});

/// Wavefront OBJ polylines of the space curve and its focal curve.
/// Throws when there is no ok record.
std::string to_obj(const SampleSeries& series);

/// Write via a temp file in the target directory followed by a rename,
/// so readers never observe a half-written file.
void atomic_write(const std::string& path, const std::string& content);

} // namespace toro
