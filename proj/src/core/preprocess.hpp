#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "core/spectrum.hpp"

namespace ftirqc {

enum class BaselineMethod { LinearEndpoints, RubberBand, None };

const char* baseline_method_name(BaselineMethod method) noexcept;
std::optional<BaselineMethod> baseline_method_from_token(std::string_view token);

/// Preprocessing parameters. grid_step defaults to the 2 cm^-1 resolution
/// typical of bench FTIR instruments. Smoothing is off by default so that
/// measured peak heights are not perturbed unless asked for.
struct PreprocessConfig {
    double grid_step = 2.0;
    int smooth_window = 9;
    int smooth_poly_order = 2;
    BaselineMethod baseline_method = BaselineMethod::RubberBand;
    bool smooth_enabled = false;
};

/// Throws InvalidConfig unless grid_step > 0, smooth_window is odd and >= 3,
/// and smooth_poly_order is in [0, smooth_window).
void validate(const PreprocessConfig& cfg);

/// Piecewise-linear evaluation over sorted nodes. xq must lie within
/// [xs.front(), xs.back()]; exact at the nodes.
double interp_linear(std::span<const double> xs, std::span<const double> ys, double xq);

/// Resample onto the uniform grid {ceil(x_min/step)*step, ..., <= x_max} by
/// linear interpolation. Never extrapolates. Throws StepTooLarge if fewer
/// than kMinPoints grid points fit the x range.
Spectrum resample_uniform(const Spectrum& s, double step);

/// Convolution weights for the central point of a Savitzky-Golay filter.
/// Exposed for testing; length == window.
std::vector<double> savitzky_golay_weights(int window, int poly_order);

/// Savitzky-Golay smoothing on a uniform grid, edges handled by mirror
/// padding (reflection about the edge sample). Throws WindowTooLarge if the
/// window exceeds the spectrum length.
Spectrum smooth(const Spectrum& s, const PreprocessConfig& cfg);

/// Subtract the baseline so peak heights are measured from a common zero.
///
/// LinearEndpoints subtracts the line through the first and last points
/// (both end up exactly 0). RubberBand subtracts the lower convex hull of
/// the point set, evaluated piecewise-linearly; the result is >= 0
/// everywhere and touches 0 at every hull vertex. Requires absorbance input.
Spectrum baseline_correct(const Spectrum& s, BaselineMethod method);

} // namespace ftirqc
