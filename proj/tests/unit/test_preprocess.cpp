#include <doctest.h>

#include <cmath>
#include <random>

#include "core/errors.hpp"
#include "core/preprocess.hpp"
#include "support/fixtures.hpp"

using namespace ftirqc;
using fixtures::thrown_code;

namespace {

Spectrum line_spectrum(double x0, double x1, double step, double slope, double intercept) {
    Spectrum s;
    s.id = "line";
    s.y_unit = YUnit::Absorbance;
    s.x = fixtures::uniform_axis(x0, x1, step);
    for (double x : s.x) s.y.push_back(intercept + slope * x);
    return s;
}

} // namespace

TEST_CASE("interp_linear matches the hand-computed two-point bracket") {
    const std::vector<double> xs = {800.0, 4000.0};
    const std::vector<double> ys = {0.0, 3.2};
    CHECK(interp_linear(xs, ys, 1600.0) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(interp_linear(xs, ys, 3200.0) == doctest::Approx(2.4).epsilon(1e-12));
    CHECK(interp_linear(xs, ys, 800.0) == 0.0);
    CHECK(interp_linear(xs, ys, 4000.0) == 3.2);
    CHECK(thrown_code([&] { interp_linear(xs, ys, 799.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("resample_uniform is a fixed point on an already-uniform grid") {
    const Spectrum s = fixtures::absorbance_spectrum(fixtures::golden_bands(), 800, 4000, 2);
    const Spectrum r = resample_uniform(s, 2.0);
    REQUIRE(r.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(r.x[i] == s.x[i]);
        CHECK(r.y[i] == s.y[i]);
    }
}

TEST_CASE("resample_uniform interpolates the line through (800,0)-(4000,3.2)") {
    // Same line as the two-point bracket, carried by a spectrum-sized grid.
    const Spectrum s = line_spectrum(800, 4000, 200, 0.001, -0.8);
    const Spectrum r = resample_uniform(s, 100.0);
    REQUIRE(r.size() == 33);
    auto y_at = [&](double x) {
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r.x[i] == x) return r.y[i];
        FAIL("grid point missing");
        return 0.0;
    };
    CHECK(y_at(1600.0) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(y_at(3200.0) == doctest::Approx(2.4).epsilon(1e-12));
}

TEST_CASE("resample_uniform rejects steps leaving fewer than 16 points") {
    const Spectrum s = line_spectrum(800, 4000, 200, 0.001, -0.8);
    CHECK(thrown_code([&] { resample_uniform(s, 1600.0); }) == ErrorCode::StepTooLarge);
    CHECK(thrown_code([&] { resample_uniform(s, 250.0); }) == ErrorCode::StepTooLarge); // 13 pts
    CHECK_NOTHROW(resample_uniform(s, 200.0)); // 17 pts
}

TEST_CASE("resample_uniform equals brute-force piecewise-linear evaluation on a jittered grid") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> jitter(0.05, 1.95);
    std::uniform_real_distribution<double> ydist(0.0, 2.0);
    Spectrum s;
    s.y_unit = YUnit::Absorbance;
    double x = 800.0;
    for (int i = 0; i < 400; ++i) {
        s.x.push_back(x);
        s.y.push_back(ydist(rng));
        x += jitter(rng);
    }
    const Spectrum r = resample_uniform(s, 1.0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        // Independent scan: find the bracketing segment from scratch.
        std::size_t k = 1;
        while (s.x[k] < r.x[i]) ++k;
        const double t = (r.x[i] - s.x[k - 1]) / (s.x[k] - s.x[k - 1]);
        const double expected = s.y[k - 1] + t * (s.y[k] - s.y[k - 1]);
        CHECK(std::abs(r.y[i] - expected) <= 1e-12);
    }
    CHECK(r.x.front() >= s.x_min());
    CHECK(r.x.back() <= s.x_max());
    CHECK(r.x.front() - s.x_min() < 1.0); // endpoints preserved within one step
    CHECK(s.x_max() - r.x.back() < 1.0);
}

// ---------------------------------------------------------------------------

TEST_CASE("savitzky_golay_weights sum to one and are symmetric") {
    for (int window : {5, 9, 11, 17}) {
        for (int order : {0, 2, 4}) {
            const auto w = savitzky_golay_weights(window, order);
            REQUIRE(static_cast<int>(w.size()) == window);
            double sum = 0.0;
            for (double v : w) sum += v;
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
            for (int i = 0; i < window / 2; ++i)
                CHECK(w[i] == doctest::Approx(w[window - 1 - i]).epsilon(1e-10));
        }
    }
}

TEST_CASE("smooth leaves a constant spectrum unchanged") {
    Spectrum s = line_spectrum(800, 4000, 2, 0.0, 0.7);
    PreprocessConfig cfg;
    const Spectrum sm = smooth(s, cfg);
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(std::abs(sm.y[i] - 0.7) <= 1e-12);
}

TEST_CASE("smooth reproduces an exact quadratic away from the edges") {
    Spectrum s;
    s.y_unit = YUnit::Absorbance;
    s.x = fixtures::uniform_axis(800, 4000, 2);
    for (double x : s.x) {
        const double u = (x - 2400.0) / 1600.0;
        s.y.push_back(u * u);
    }
    PreprocessConfig cfg; // window 9, order 2
    const Spectrum sm = smooth(s, cfg);
    const std::size_t half = 4;
    for (std::size_t i = half; i + half < s.size(); ++i)
        CHECK(std::abs(sm.y[i] - s.y[i]) <= 1e-9);
}

TEST_CASE("smooth cuts uniform-noise RMS at least in half on a Gaussian peak") {
    const std::vector<fixtures::GaussianBand> clean_bands = {{2400.0, 1.0, 100.0}};
    const Spectrum clean = fixtures::absorbance_spectrum(clean_bands);
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> noise(-0.01, 0.01);
    Spectrum noisy = clean;
    for (double& v : noisy.y) v += noise(rng);

    PreprocessConfig cfg;
    cfg.smooth_window = 11;
    cfg.smooth_poly_order = 2;
    const Spectrum smoothed = smooth(noisy, cfg);

    auto rms_vs_clean = [&](const Spectrum& s) {
        double acc = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const double d = s.y[i] - clean.y[i];
            acc += d * d;
        }
        return std::sqrt(acc / static_cast<double>(s.size()));
    };
    CHECK(rms_vs_clean(smoothed) * 2.0 <= rms_vs_clean(noisy));
}

TEST_CASE("smooth window larger than the spectrum is rejected") {
    Spectrum s = line_spectrum(800, 830, 2, 0.0, 1.0); // 16 points
    PreprocessConfig cfg;
    cfg.smooth_window = 17;
    CHECK(thrown_code([&] { smooth(s, cfg); }) == ErrorCode::WindowTooLarge);
}

TEST_CASE("preprocess config invariants") {
    PreprocessConfig cfg;
    cfg.smooth_window = 8;
    CHECK(thrown_code([&] { validate(cfg); }) == ErrorCode::InvalidConfig);
    cfg.smooth_window = 9;
    cfg.smooth_poly_order = 9;
    CHECK(thrown_code([&] { validate(cfg); }) == ErrorCode::InvalidConfig);
    cfg.smooth_poly_order = 2;
    cfg.grid_step = 0.0;
    CHECK(thrown_code([&] { validate(cfg); }) == ErrorCode::InvalidConfig);
}

// ---------------------------------------------------------------------------

TEST_CASE("baseline_correct removes an additive offset for both methods") {
    const Spectrum s = fixtures::absorbance_spectrum(fixtures::golden_bands());
    for (auto method : {BaselineMethod::LinearEndpoints, BaselineMethod::RubberBand}) {
        Spectrum shifted = s;
        for (double& v : shifted.y) v += 0.37;
        const Spectrum a = baseline_correct(s, method);
        const Spectrum b = baseline_correct(shifted, method);
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(a.y[i] - b.y[i]) <= 1e-12);
    }
}

TEST_CASE("rubber band leaves a single Gaussian on a zero baseline unchanged") {
    const Spectrum s = fixtures::absorbance_spectrum({{2400.0, 0.5, 15.0}});
    const Spectrum c = baseline_correct(s, BaselineMethod::RubberBand);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(c.y[i] - s.y[i]) <= 1e-6);
}

TEST_CASE("rubber band recovers a Gaussian peak height on a tilted ramp within 1%") {
    Spectrum s = fixtures::absorbance_spectrum({{2930.0, 0.40, 15.0}});
    for (std::size_t i = 0; i < s.size(); ++i) s.y[i] += 0.001 * s.x[i];
    const Spectrum c = baseline_correct(s, BaselineMethod::RubberBand);
    double peak = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (std::abs(c.x[i] - 2930.0) <= 10.0) peak = std::max(peak, c.y[i]);
    CHECK(std::abs(peak - 0.40) <= 0.004);
}

TEST_CASE("rubber band output is nonnegative and touches zero at two or more points") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ydist(0.2, 1.0);
    Spectrum s;
    s.y_unit = YUnit::Absorbance;
    s.x = fixtures::uniform_axis(800, 800 + 2 * 99, 2);
    for (int i = 0; i < 100; ++i) s.y.push_back(ydist(rng));

    const Spectrum c = baseline_correct(s, BaselineMethod::RubberBand);
    std::size_t zeros = 0;
    for (double v : c.y) {
        CHECK(v >= 0.0);
        if (v == 0.0) ++zeros;
    }
    CHECK(zeros >= 2);
}

TEST_CASE("baseline_correct is idempotent for both methods") {
    const Spectrum s = fixtures::absorbance_spectrum(fixtures::golden_bands());
    for (auto method : {BaselineMethod::LinearEndpoints, BaselineMethod::RubberBand}) {
        const Spectrum once = baseline_correct(s, method);
        const Spectrum twice = baseline_correct(once, method);
        for (std::size_t i = 0; i < s.size(); ++i)
            CHECK(std::abs(once.y[i] - twice.y[i]) <= 1e-9);
    }
}

TEST_CASE("linear endpoints correction zeroes both endpoints exactly") {
    Spectrum s = fixtures::absorbance_spectrum(fixtures::golden_bands());
    for (std::size_t i = 0; i < s.size(); ++i) s.y[i] += 0.1 + 2e-4 * s.x[i];
    const Spectrum c = baseline_correct(s, BaselineMethod::LinearEndpoints);
    CHECK(c.y.front() == 0.0);
    CHECK(c.y.back() == 0.0);
}

TEST_CASE("baseline_correct requires absorbance input and None is the identity") {
    Spectrum t;
    t.y_unit = YUnit::TransmittancePercent;
    t.x = fixtures::uniform_axis(800, 830, 2);
    t.y.assign(16, 50.0);
    CHECK(thrown_code([&] { baseline_correct(t, BaselineMethod::RubberBand); }) ==
          ErrorCode::InvalidArgument);

    const Spectrum s = fixtures::absorbance_spectrum(fixtures::golden_bands());
    CHECK(fixtures::spectra_close(baseline_correct(s, BaselineMethod::None), s, 0.0));
}
