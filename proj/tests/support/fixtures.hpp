#pragma once

// Shared fixtures and reference oracles for the test suites. Oracles here
// are deliberately written as plain scans, independent of the library's
// algorithms.

#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/peaks.hpp"
#include "core/spectrum.hpp"

namespace fixtures {

struct GaussianBand {
    double center;
    double height;
    double sigma;
};

inline double gaussian_sum(double x, const std::vector<GaussianBand>& bands) {
    double y = 0.0;
    for (const GaussianBand& b : bands) {
        const double t = (x - b.center) / b.sigma;
        y += b.height * std::exp(-0.5 * t * t);
    }
    return y;
}

inline std::vector<double> uniform_axis(double x0, double x1, double step) {
    const auto n = static_cast<std::size_t>(std::llround((x1 - x0) / step)) + 1;
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = x0 + step * static_cast<double>(i);
    return x;
}

inline ftirqc::Spectrum absorbance_spectrum(const std::vector<GaussianBand>& bands,
                                            double x0 = 800.0, double x1 = 4000.0,
                                            double step = 2.0,
                                            const std::string& id = "synthetic") {
    ftirqc::Spectrum s;
    s.id = id;
    s.y_unit = ftirqc::YUnit::Absorbance;
    s.x = uniform_axis(x0, x1, step);
    s.y.reserve(s.x.size());
    for (double x : s.x) s.y.push_back(gaussian_sum(x, bands));
    return s;
}

/// CSV text of the model rendered as percent transmittance, T = 100*10^-A.
inline std::string percent_transmittance_csv(const std::vector<GaussianBand>& bands,
                                             double x0 = 800.0, double x1 = 4000.0,
                                             double step = 2.0) {
    std::string out = "wavenumber_cm-1,transmittance_percent\n";
    char buf[80];
    for (double x : uniform_axis(x0, x1, step)) {
        const double t = 100.0 * std::pow(10.0, -gaussian_sum(x, bands));
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g\n", x, t);
        out += buf;
    }
    return out;
}

// The four diagnostic bands sized so the construction ratios come out at
// A-Factor 0.68 and C-Factor 0.58 exactly.
inline const std::vector<GaussianBand>& golden_bands() {
    static const std::vector<GaussianBand> bands = {
        {2930.0, 0.40, 15.0},
        {2860.0, 0.28, 15.0},
        {1705.0, 0.58 * 0.32 / 0.42, 15.0},
        {1630.0, 0.32, 15.0},
    };
    return bands;
}

// Aqueous-phase models: N-H bands only (clean separation), and the same
// plus an aliphatic stretch contribution (carry-over).
inline const std::vector<GaussianBand>& aqueous_clean_bands() {
    static const std::vector<GaussianBand> bands = {
        {3385.0, 0.50, 40.0},
        {1645.0, 0.45, 30.0},
    };
    return bands;
}

inline std::vector<GaussianBand> aqueous_contaminated_bands() {
    std::vector<GaussianBand> bands = aqueous_clean_bands();
    bands.push_back({2920.0, 0.15, 20.0}); // 0.3 x global max
    return bands;
}

/// O(n^2) reference implementation of strict-local-maximum detection with
/// topographic prominence: for each candidate, find the nearest strictly
/// higher sample on each side, then take the minimum over each gap.
inline std::vector<ftirqc::Peak> brute_force_peaks(const ftirqc::Spectrum& s,
                                                   double min_prominence) {
    const std::vector<double>& y = s.y;
    const long n = static_cast<long>(y.size());
    std::vector<ftirqc::Peak> out;
    for (long i = 1; i + 1 < n; ++i) {
        if (!(y[i] > y[i - 1] && y[i] > y[i + 1])) continue;
        long left_stop = -1;
        for (long j = i - 1; j >= 0; --j)
            if (y[j] > y[i]) {
                left_stop = j;
                break;
            }
        long right_stop = n;
        for (long j = i + 1; j < n; ++j)
            if (y[j] > y[i]) {
                right_stop = j;
                break;
            }
        double left_min = y[i];
        for (long j = left_stop + 1; j < i; ++j) left_min = std::min(left_min, y[j]);
        double right_min = y[i];
        for (long j = i + 1; j < right_stop; ++j) right_min = std::min(right_min, y[j]);
        const double prominence = y[i] - std::max(left_min, right_min);
        if (prominence >= min_prominence) out.push_back({s.x[i], y[i], prominence});
    }
    return out;
}

inline ftirqc::Spectrum random_spectrum(std::mt19937& rng, std::size_t max_points = 200) {
    std::uniform_int_distribution<std::size_t> size_dist(ftirqc::kMinPoints, max_points);
    std::uniform_real_distribution<double> y_dist(0.0, 1.0);
    ftirqc::Spectrum s;
    s.id = "random";
    s.y_unit = ftirqc::YUnit::Absorbance;
    const std::size_t n = size_dist(rng);
    s.x = uniform_axis(800.0, 800.0 + 2.0 * static_cast<double>(n - 1), 2.0);
    s.y.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.y.push_back(y_dist(rng));
    return s;
}

template <typename Fn>
std::optional<ftirqc::ErrorCode> thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const ftirqc::Error& e) {
        return e.code();
    } catch (...) {
        return std::nullopt;
    }
    return std::nullopt;
}

inline bool spectra_close(const ftirqc::Spectrum& a, const ftirqc::Spectrum& b,
                          double tol = 1e-9) {
    if (a.size() != b.size() || a.y_unit != b.y_unit) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a.x[i] - b.x[i]) > tol || std::abs(a.y[i] - b.y[i]) > tol) return false;
    return true;
}

} // namespace fixtures
