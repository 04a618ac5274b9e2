#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/peaks.hpp"
#include "core/spectrum.hpp"

namespace ftirqc {

// Diagnostic wavenumbers for the aliphatic, carbonyl and aromatic bands.
inline constexpr double kBandAliphatic2930 = 2930.0;
inline constexpr double kBandAliphatic2860 = 2860.0;
inline constexpr double kBandCarbonyl1705 = 1705.0;
inline constexpr double kBandAromatic1630 = 1630.0;

/// The four diagnostic peak heights plus the derived factors.
struct FactorResult {
    double h2930 = 0.0;
    double h2860 = 0.0;
    double h1705 = 0.0;
    double h1630 = 0.0;
    double a_factor = 0.0;
    double c_factor = 0.0;
};

enum class MaturityLevel { Immature, Mature, PeakMature, Postmature };
enum class KerogenType { I, II, III, IV };

const char* maturity_level_name(MaturityLevel level) noexcept;
const char* kerogen_type_name(KerogenType type) noexcept;

/// Oil-proneness wording fixed by kerogen type.
const char* oil_intensity_text(KerogenType type) noexcept;

struct MaturityResult {
    double vr_percent = 0.0;
    MaturityLevel maturity_level = MaturityLevel::Immature;
    KerogenType kerogen_type = KerogenType::IV;
    std::string oil_intensity;
};

/// One knot of the C-Factor -> vitrinite reflectance map.
struct VrKnot {
    double c = 0.0;
    double vr = 0.0;
};

/// Classification thresholds. The published grid diagram behind the
/// A/C-Factor method prints no numbers one can lift, so these defaults are
/// a single-anchor calibration (A=0.68, C=0.58 -> Type II, VR 0.32,
/// immature) and should be treated as replaceable configuration, not ground
/// truth. Reports echo the grid in use for that reason.
struct ClassificationGrid {
    /// A-Factor breakpoints partitioning [0,1] into types IV / III / II / I.
    std::array<double, 3> kerogen_a_breaks{0.30, 0.55, 0.80};
    /// Piecewise-linear C-Factor -> VR% map, c increasing, vr strictly
    /// decreasing. The default two-knot map is vr = 0.9 - c.
    std::vector<VrKnot> vr_map{{0.0, 0.90}, {0.9, 0.0}};
    /// VR% breakpoints for immature / mature / peak mature / postmature.
    std::array<double, 3> maturity_breaks{0.6, 1.0, 1.35};
};

/// Throws InvalidConfig unless breaks are strictly increasing, the map has
/// >= 2 knots with c strictly increasing and vr strictly decreasing.
void validate(const ClassificationGrid& grid);

/// (h2930 + h2860) / (h2930 + h2860 + h1630): the aliphatic share of the
/// aliphatic + aromatic band heights. Throws ZeroDenominator when all three
/// heights are zero.
double a_factor(double h2930, double h2860, double h1630);

/// h1705 / (h1705 + h1630): the carbonyl share of the carbonyl + aromatic
/// band heights. Throws ZeroDenominator when both heights are zero.
double c_factor(double h1705, double h1630);

/// Extracts the four diagnostic heights with band_height (+-half_width
/// windows) and applies both factor formulas. The spectrum must be
/// baseline-corrected absorbance covering all four windows.
FactorResult compute_factors(const Spectrum& s, double half_width = kDefaultHalfWidth);

/// Maps (A-Factor, C-Factor) to kerogen type, VR% estimate, maturity level
/// and oil-intensity wording. Interval binning is half-open, closed below,
/// so boundary values are deterministic. VR% is interpolated from the grid's
/// vr_map (c clamped to the knot range) and clamped to [0, 4].
MaturityResult classify(double a, double c, const ClassificationGrid& grid = {});

} // namespace ftirqc
