#pragma once

#include <string_view>
#include <vector>

#include "core/classify.hpp"
#include "core/peaks.hpp"
#include "core/preprocess.hpp"
#include "core/proximate.hpp"

namespace ftirqc {

/// "key = value" lines with '#' comments. Unknown or repeated keys are
/// rejected so typos fail loudly instead of silently keeping a default.

/// Keys: grid_step, smooth_window, smooth_poly_order, baseline_method,
/// smooth. Missing keys keep their defaults.
PreprocessConfig parse_preprocess_config(std::string_view text);

/// Keys: kerogen_a_breaks (3 comma-separated numbers), vr_map
/// (comma-separated c:vr knots), maturity_breaks (3 numbers). Missing keys
/// keep the built-in single-anchor defaults.
ClassificationGrid parse_grid_config(std::string_view text);

/// One band per line: "label, lo, hi, group[, vibration]"; '#' comments.
std::vector<BandDefinition> parse_band_table(std::string_view text);

/// Keys: mc, vs, ac (required), ts, fc (derived when absent), u_mc..u_fc.
ProximateComposition parse_composition(std::string_view text);

} // namespace ftirqc
