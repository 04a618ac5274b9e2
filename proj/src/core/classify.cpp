#include "core/classify.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace ftirqc {

const char* maturity_level_name(MaturityLevel level) noexcept {
    switch (level) {
        case MaturityLevel::Immature: return "Immature";
        case MaturityLevel::Mature: return "Mature";
        case MaturityLevel::PeakMature: return "Peak Mature";
        case MaturityLevel::Postmature: return "Postmature";
    }
    return "unknown";
}

const char* kerogen_type_name(KerogenType type) noexcept {
    switch (type) {
        case KerogenType::I: return "I";
        case KerogenType::II: return "II";
        case KerogenType::III: return "III";
        case KerogenType::IV: return "IV";
    }
    return "unknown";
}

const char* oil_intensity_text(KerogenType type) noexcept {
    switch (type) {
        case KerogenType::I: return "highly oil-prone";
        case KerogenType::II: return "moderate oil-prone";
        case KerogenType::III: return "low oil-prone / gas-prone";
        case KerogenType::IV: return "no hydrocarbon potential";
    }
    return "unknown";
}

void validate(const ClassificationGrid& grid) {
    auto strictly_increasing = [](const std::array<double, 3>& b) {
        return b[0] < b[1] && b[1] < b[2];
    };
    if (!strictly_increasing(grid.kerogen_a_breaks))
        raise(ErrorCode::InvalidConfig, "kerogen_a_breaks must be strictly increasing");
    if (!strictly_increasing(grid.maturity_breaks))
        raise(ErrorCode::InvalidConfig, "maturity_breaks must be strictly increasing");
    if (grid.vr_map.size() < 2)
        raise(ErrorCode::InvalidConfig, "vr_map needs at least 2 knots");
    for (std::size_t i = 1; i < grid.vr_map.size(); ++i) {
        if (!(grid.vr_map[i].c > grid.vr_map[i - 1].c))
            raise(ErrorCode::InvalidConfig, "vr_map knots must have strictly increasing c");
        if (!(grid.vr_map[i].vr < grid.vr_map[i - 1].vr))
            raise(ErrorCode::InvalidConfig, "vr_map vr must strictly decrease as c increases");
    }
    for (const VrKnot& k : grid.vr_map)
        if (!std::isfinite(k.c) || !std::isfinite(k.vr))
            raise(ErrorCode::InvalidConfig, "vr_map knots must be finite");
}

namespace {

void require_nonnegative(std::initializer_list<double> heights) {
    for (double h : heights)
        if (!(h >= 0.0) || !std::isfinite(h))
            raise(ErrorCode::InvalidArgument, "band heights must be finite and >= 0");
}

} // namespace

double a_factor(double h2930, double h2860, double h1630) {
    require_nonnegative({h2930, h2860, h1630});
    const double denom = h2930 + h2860 + h1630;
    if (denom == 0.0)
        raise(ErrorCode::ZeroDenominator, "all three A-Factor band heights are zero");
    return (h2930 + h2860) / denom;
}

double c_factor(double h1705, double h1630) {
    require_nonnegative({h1705, h1630});
    const double denom = h1705 + h1630;
    if (denom == 0.0)
        raise(ErrorCode::ZeroDenominator, "both C-Factor band heights are zero");
    return h1705 / denom;
}

FactorResult compute_factors(const Spectrum& s, double half_width) {
    FactorResult r;
    r.h2930 = band_height(s, kBandAliphatic2930, half_width).height;
    r.h2860 = band_height(s, kBandAliphatic2860, half_width).height;
    r.h1705 = band_height(s, kBandCarbonyl1705, half_width).height;
    r.h1630 = band_height(s, kBandAromatic1630, half_width).height;
    r.a_factor = a_factor(r.h2930, r.h2860, r.h1630);
    r.c_factor = c_factor(r.h1705, r.h1630);
    return r;
}

namespace {

// Half-open binning, closed below: value in [breaks[i-1], breaks[i]) gets
// bin i, so boundary values resolve deterministically.
std::size_t bin_index(double value, const std::array<double, 3>& breaks) {
    std::size_t bin = 0;
    for (double b : breaks)
        if (value >= b) ++bin;
    return bin;
}

double interpolate_vr(double c, const std::vector<VrKnot>& knots) {
    const double c_clamped = std::clamp(c, knots.front().c, knots.back().c);
    std::size_t hi = 1;
    while (hi + 1 < knots.size() && knots[hi].c < c_clamped) ++hi;
    const VrKnot& a = knots[hi - 1];
    const VrKnot& b = knots[hi];
    const double t = (c_clamped - a.c) / (b.c - a.c);
    return a.vr * (1.0 - t) + b.vr * t;
}

} // namespace

MaturityResult classify(double a, double c, const ClassificationGrid& grid) {
    validate(grid);
    if (!(a >= 0.0 && a <= 1.0) || !(c >= 0.0 && c <= 1.0))
        raise(ErrorCode::InvalidArgument, "a and c must be in [0, 1]");

    static constexpr KerogenType kTypesByBin[] = {KerogenType::IV, KerogenType::III,
                                                  KerogenType::II, KerogenType::I};
    static constexpr MaturityLevel kLevelsByBin[] = {MaturityLevel::Immature, MaturityLevel::Mature,
                                                     MaturityLevel::PeakMature,
                                                     MaturityLevel::Postmature};

    MaturityResult result;
    result.kerogen_type = kTypesByBin[bin_index(a, grid.kerogen_a_breaks)];
    result.vr_percent = std::clamp(interpolate_vr(c, grid.vr_map), 0.0, 4.0);
    result.maturity_level = kLevelsByBin[bin_index(result.vr_percent, grid.maturity_breaks)];
    result.oil_intensity = oil_intensity_text(result.kerogen_type);
    return result;
}

} // namespace ftirqc
