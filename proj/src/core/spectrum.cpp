#include "core/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "core/errors.hpp"

namespace ftirqc {

const char* y_unit_name(YUnit unit) noexcept {
    switch (unit) {
        case YUnit::TransmittancePercent: return "transmittance_percent";
        case YUnit::TransmittanceFraction: return "transmittance_fraction";
        case YUnit::Absorbance: return "absorbance";
    }
    return "unknown";
}

std::optional<YUnit> y_unit_from_token(std::string_view token) {
    std::string t;
    t.reserve(token.size());
    for (char c : token) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "transmittance_percent" || t == "percent-t" || t == "percent_t" || t == "%t")
        return YUnit::TransmittancePercent;
    if (t == "transmittance_fraction" || t == "fraction-t" || t == "fraction_t")
        return YUnit::TransmittanceFraction;
    if (t == "absorbance")
        return YUnit::Absorbance;
    return std::nullopt;
}

void validate(const Spectrum& s) {
    if (s.x.size() != s.y.size())
        raise(ErrorCode::InvalidSpectrum, "x and y arrays differ in length");
    if (s.size() < kMinPoints)
        raise(ErrorCode::TooFewPoints,
              "spectrum has " + std::to_string(s.size()) + " points, need at least " +
                  std::to_string(kMinPoints));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
            raise(ErrorCode::NonFiniteValue, "non-finite value at point " + std::to_string(i));
    }
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s.x[i] == s.x[i - 1])
            raise(ErrorCode::DuplicateWavenumber,
                  "duplicate wavenumber " + std::to_string(s.x[i]));
        if (s.x[i] < s.x[i - 1])
            raise(ErrorCode::InvalidSpectrum, "wavenumbers not strictly increasing");
    }
    switch (s.y_unit) {
        case YUnit::TransmittancePercent:
            for (double v : s.y)
                if (v <= 0.0 || v > 100.0)
                    raise(ErrorCode::InvalidSpectrum,
                          "percent transmittance " + std::to_string(v) + " outside (0, 100]");
            break;
        case YUnit::TransmittanceFraction:
            for (double v : s.y)
                if (v <= 0.0 || v > 1.0)
                    raise(ErrorCode::InvalidSpectrum,
                          "fractional transmittance " + std::to_string(v) + " outside (0, 1]");
            break;
        case YUnit::Absorbance:
            break; // any finite value allowed
    }
}

Spectrum to_absorbance(const Spectrum& s) {
    validate(s);
    if (s.y_unit == YUnit::Absorbance)
        return s;
    Spectrum out = s;
    out.y_unit = YUnit::Absorbance;
    const bool percent = s.y_unit == YUnit::TransmittancePercent;
    for (double& v : out.y) {
        double t = percent ? v / 100.0 : v;
        v = t <= kTransmittanceFloor ? kAbsorbanceCap : -std::log10(t);
    }
    return out;
}

} // namespace ftirqc
