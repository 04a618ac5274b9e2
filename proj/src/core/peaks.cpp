#include "core/peaks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace ftirqc {

Peak band_height(const Spectrum& s, double center, double half_width) {
    validate(s);
    if (!(half_width > 0.0)) raise(ErrorCode::InvalidArgument, "half_width must be > 0");
    const double lo = center - half_width;
    const double hi = center + half_width;
    if (s.x_min() > lo || s.x_max() < hi)
        raise(ErrorCode::WindowOutOfRange,
              "spectrum [" + std::to_string(s.x_min()) + ", " + std::to_string(s.x_max()) +
                  "] does not cover window [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");

    const double eps = 1e-9 * half_width;
    auto first = std::lower_bound(s.x.begin(), s.x.end(), lo - eps);
    auto last = std::upper_bound(s.x.begin(), s.x.end(), hi + eps);
    const std::size_t begin = static_cast<std::size_t>(first - s.x.begin());
    const std::size_t end = static_cast<std::size_t>(last - s.x.begin());
    if (begin >= end)
        raise(ErrorCode::WindowOutOfRange, "no samples inside window around " + std::to_string(center));

    std::size_t arg = begin;
    for (std::size_t i = begin + 1; i < end; ++i)
        if (s.y[i] > s.y[arg]) arg = i;
    const double raw_max = s.y[arg];

    auto side_min = [&](std::size_t from, std::size_t to) {
        double m = raw_max; // an empty side contributes zero prominence
        for (std::size_t i = from; i < to; ++i) m = std::min(m, s.y[i]);
        return m;
    };
    const double left_min = side_min(begin, arg);
    const double right_min = side_min(arg + 1, end);

    Peak p;
    p.position = s.x[arg];
    p.height = std::max(raw_max, 0.0);
    p.prominence = std::clamp(raw_max - std::max(left_min, right_min), 0.0, p.height);
    return p;
}

std::vector<Peak> detect_peaks(const Spectrum& s, double min_prominence) {
    validate(s);
    if (min_prominence < 0.0) raise(ErrorCode::InvalidArgument, "min_prominence must be >= 0");
    const std::size_t n = s.size();
    std::vector<Peak> peaks;

    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(s.y[i] > s.y[i - 1] && s.y[i] > s.y[i + 1])) continue; // strict maxima only

        // Scan outward until a strictly higher sample or the edge; the
        // valley on each side is the minimum over the scanned stretch.
        double left_min = s.y[i];
        for (std::size_t j = i; j-- > 0;) {
            if (s.y[j] > s.y[i]) break;
            left_min = std::min(left_min, s.y[j]);
        }
        double right_min = s.y[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (s.y[j] > s.y[i]) break;
            right_min = std::min(right_min, s.y[j]);
        }

        const double prominence = s.y[i] - std::max(left_min, right_min);
        if (prominence >= min_prominence)
            peaks.push_back({s.x[i], s.y[i], prominence});
    }
    return peaks; // x ascending, so already sorted by position
}

std::vector<std::pair<Peak, BandDefinition>> assign_bands(const std::vector<Peak>& peaks,
                                                          const std::vector<BandDefinition>& table) {
    std::vector<std::pair<Peak, BandDefinition>> out;
    for (const Peak& p : peaks)
        for (const BandDefinition& band : table)
            if (band.contains(p.position)) out.emplace_back(p, band);
    return out;
}

const std::vector<BandDefinition>& default_band_table() {
    static const std::vector<BandDefinition> table = {
        {"aliphatic C-H stretch", kAliphaticStretchLo, kAliphaticStretchHi,
         "long-chain aliphatic hydrocarbons (-CH3)", "C-H stretch"},
        {"aliphatic C-H bend", kAliphaticBendLo, kAliphaticBendHi,
         "long-chain aliphatic hydrocarbons (-CH2)", "C-H bend"},
        {"carbonyl C=O", 1590.0, 1800.0,
         "ketones, carboxylic acids, aldehydes, esters", "C=O stretch"},
        {"C-O", 1024.0, 1100.0, "alcohols, phenols", "C-O stretch"},
        {"N-H (NH2) 1645", 1630.0, 1660.0, "primary amine NH2", "N-H stretch"},
        {"N-H (NH2) 3385", 3370.0, 3400.0, "primary amine NH2", "N-H stretch"},
    };
    return table;
}

SeparationVerdict separation_verdict(const Spectrum& aqueous, double rel_threshold) {
    validate(aqueous);
    if (!(rel_threshold >= 0.0))
        raise(ErrorCode::InvalidArgument, "rel_threshold must be >= 0");

    SeparationVerdict verdict;
    verdict.threshold_used = rel_threshold;
    verdict.global_max = *std::max_element(aqueous.y.begin(), aqueous.y.end());

    const BandDefinition windows[] = {
        {"aliphatic C-H stretch", kAliphaticStretchLo, kAliphaticStretchHi,
         "long-chain aliphatic hydrocarbons (-CH3)", "C-H stretch"},
        {"aliphatic C-H bend", kAliphaticBendLo, kAliphaticBendHi,
         "long-chain aliphatic hydrocarbons (-CH2)", "C-H bend"},
    };
    for (const BandDefinition& band : windows) {
        const double center = 0.5 * (band.lo + band.hi);
        const double half_width = 0.5 * (band.hi - band.lo);
        const Peak peak = band_height(aqueous, center, half_width);
        if (peak.height > rel_threshold * verdict.global_max)
            verdict.offending_bands.push_back({band, peak});
    }
    verdict.status = verdict.offending_bands.empty() ? SeparationStatus::Complete
                                                     : SeparationStatus::Incomplete;
    return verdict;
}

} // namespace ftirqc
