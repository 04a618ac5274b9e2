#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ftirqc {

/// Intensity unit of the y axis.
enum class YUnit {
    TransmittancePercent,
    TransmittanceFraction,
    Absorbance,
};

/// Canonical token used in CSV headers and reports.
const char* y_unit_name(YUnit unit) noexcept;

/// Recognizes canonical tokens plus the CLI spellings
/// (percent-t, fraction-t, absorbance). Case-insensitive.
std::optional<YUnit> y_unit_from_token(std::string_view token);

/// An infrared spectrum on a strictly increasing wavenumber axis (cm^-1).
///
/// Invariants (checked by validate()):
///   - x strictly increasing, all values finite
///   - at least kMinPoints points
///   - TransmittancePercent y in (0, 100]; TransmittanceFraction y in (0, 1];
///     Absorbance y any finite value (may be negative before baseline
///     correction)
struct Spectrum {
    std::string id;
    std::vector<double> x;
    std::vector<double> y;
    YUnit y_unit = YUnit::TransmittancePercent;
    std::map<std::string, std::string> metadata;

    std::size_t size() const noexcept { return x.size(); }
    double x_min() const { return x.front(); }
    double x_max() const { return x.back(); }
};

inline constexpr std::size_t kMinPoints = 16;

/// Transmittance below this is clamped before taking the log, which caps
/// absorbance at kAbsorbanceCap on noisy near-zero points.
inline constexpr double kTransmittanceFloor = 1e-6;
inline constexpr double kAbsorbanceCap = 6.0;

/// Throws Error if any Spectrum invariant is violated.
void validate(const Spectrum& s);

/// A = -log10(T), with percent transmittance divided by 100 first and T
/// clamped below at kTransmittanceFloor. Identity on absorbance input.
Spectrum to_absorbance(const Spectrum& s);

} // namespace ftirqc
