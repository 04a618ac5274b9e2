#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "core/classify.hpp"
#include "core/errors.hpp"
#include "core/preprocess.hpp"
#include "support/fixtures.hpp"

using namespace ftirqc;
using fixtures::thrown_code;

TEST_CASE("a_factor arithmetic") {
    CHECK(a_factor(0.40, 0.28, 0.32) == doctest::Approx(0.68).epsilon(1e-12));
    for (double h : {0.1, 1.0, 7.0}) CHECK(a_factor(h, h, 0.0) == 1.0);
    CHECK(a_factor(0.0, 0.0, 0.5) == 0.0);
    CHECK(thrown_code([] { a_factor(0.0, 0.0, 0.0); }) == ErrorCode::ZeroDenominator);
    CHECK(thrown_code([] { a_factor(-0.1, 0.2, 0.3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("c_factor arithmetic") {
    CHECK(c_factor(0.58, 0.42) == doctest::Approx(0.58).epsilon(1e-12));
    for (double h : {0.1, 1.0, 7.0}) {
        CHECK(c_factor(0.0, h) == 0.0);
        CHECK(c_factor(h, h) == 0.5);
    }
    CHECK(thrown_code([] { c_factor(0.0, 0.0); }) == ErrorCode::ZeroDenominator);
}

TEST_CASE("factors are invariant under multiplicative scaling of all heights") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> h(0.01, 2.0);
    for (int iter = 0; iter < 200; ++iter) {
        const double a = h(rng), b = h(rng), c = h(rng);
        const double base_a = a_factor(a, b, c);
        const double base_c = c_factor(a, c);
        for (double k : {1e-3, 1.0, 1e3, 7.5}) {
            CHECK(a_factor(k * a, k * b, k * c) == doctest::Approx(base_a).epsilon(1e-12));
            CHECK(c_factor(k * a, k * c) == doctest::Approx(base_c).epsilon(1e-12));
        }
    }
}

TEST_CASE("compute_factors reads the golden four-Gaussian construction") {
    const Spectrum s = fixtures::absorbance_spectrum(fixtures::golden_bands());
    const FactorResult f = compute_factors(s);

    const auto& bands = fixtures::golden_bands();
    CHECK(std::abs(f.h2930 - bands[0].height) <= 1e-3);
    CHECK(std::abs(f.h2860 - bands[1].height) <= 1e-3);
    CHECK(std::abs(f.h1705 - bands[2].height) <= 1e-3);
    CHECK(std::abs(f.h1630 - bands[3].height) <= 1e-3);

    const double expected_a = a_factor(bands[0].height, bands[1].height, bands[3].height);
    const double expected_c = c_factor(bands[2].height, bands[3].height);
    CHECK(std::abs(f.a_factor - expected_a) <= 1e-3);
    CHECK(std::abs(f.c_factor - expected_c) <= 1e-3);
    CHECK(std::abs(f.a_factor - 0.68) <= 0.01);
    CHECK(std::abs(f.c_factor - 0.58) <= 0.01);
}

TEST_CASE("compute_factors on a flat spectrum raises ZeroDenominator") {
    Spectrum s;
    s.y_unit = YUnit::Absorbance;
    s.x = fixtures::uniform_axis(800, 4000, 2);
    s.y.assign(s.x.size(), 0.0);
    CHECK(thrown_code([&] { compute_factors(s); }) == ErrorCode::ZeroDenominator);
}

TEST_CASE("compute_factors is invariant under spectrum scaling") {
    const Spectrum s = fixtures::absorbance_spectrum(fixtures::golden_bands());
    const FactorResult base = compute_factors(s);
    for (double k : {1e-3, 1e3}) {
        Spectrum scaled = s;
        for (double& v : scaled.y) v *= k;
        const FactorResult f = compute_factors(scaled);
        CHECK(f.a_factor == doctest::Approx(base.a_factor).epsilon(1e-9));
        CHECK(f.c_factor == doctest::Approx(base.c_factor).epsilon(1e-9));
    }
}

TEST_CASE("compute_factors requires coverage of all four windows") {
    const Spectrum s = fixtures::absorbance_spectrum({{2000.0, 0.4, 30.0}}, 1700, 4000, 2);
    CHECK(thrown_code([&] { compute_factors(s); }) == ErrorCode::WindowOutOfRange);
}

// ---------------------------------------------------------------------------

TEST_CASE("classify reproduces the anchor row under the default grid") {
    const MaturityResult m = classify(0.68, 0.58, {});
    CHECK(m.kerogen_type == KerogenType::II);
    CHECK(m.vr_percent == doctest::Approx(0.32).epsilon(1e-12));
    CHECK(m.maturity_level == MaturityLevel::Immature);
    CHECK(m.oil_intensity == "moderate oil-prone");
    CHECK(std::string(kerogen_type_name(m.kerogen_type)) == "II");
    CHECK(std::string(maturity_level_name(m.maturity_level)) == "Immature");
}

TEST_CASE("classify maps a above the top break to Type I for any c") {
    for (double c : {0.0, 0.5, 0.9}) {
        const MaturityResult m = classify(0.95, c, {});
        CHECK(m.kerogen_type == KerogenType::I);
        CHECK(m.oil_intensity == "highly oil-prone");
    }
}

TEST_CASE("classify boundary values resolve into the interval closed below") {
    CHECK(classify(0.30, 0.5, {}).kerogen_type == KerogenType::III);
    CHECK(classify(0.55, 0.5, {}).kerogen_type == KerogenType::II);
    CHECK(classify(0.80, 0.5, {}).kerogen_type == KerogenType::I);
    CHECK(classify(0.299, 0.5, {}).kerogen_type == KerogenType::IV);

    // A grid whose vr_map hits a maturity break exactly at c = 0.
    ClassificationGrid grid;
    grid.vr_map = {{0.0, 0.6}, {0.9, 0.0}};
    CHECK(classify(0.5, 0.0, grid).maturity_level == MaturityLevel::Mature);
}

TEST_CASE("classify covers all four maturity zones") {
    ClassificationGrid grid;
    grid.vr_map = {{0.0, 2.0}, {1.0, 0.0}}; // vr = 2(1 - c)
    CHECK(classify(0.5, 0.9, grid).maturity_level == MaturityLevel::Immature);   // vr 0.2
    CHECK(classify(0.5, 0.6, grid).maturity_level == MaturityLevel::Mature);     // vr 0.8
    CHECK(classify(0.5, 0.4, grid).maturity_level == MaturityLevel::PeakMature); // vr 1.2
    CHECK(classify(0.5, 0.1, grid).maturity_level == MaturityLevel::Postmature); // vr 1.8
}

TEST_CASE("vr decreases strictly as c increases inside the default map") {
    for (double c = 0.0; c < 0.8; c += 0.05) {
        const double lo = classify(0.5, c, {}).vr_percent;
        const double hi = classify(0.5, c + 0.05, {}).vr_percent;
        CHECK(lo > hi);
    }
}

TEST_CASE("vr is monotone non-increasing in c for random valid grids") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int iter = 0; iter < 200; ++iter) {
        ClassificationGrid grid;
        const int knots = 2 + static_cast<int>(unit(rng) * 4);
        grid.vr_map.clear();
        double c = unit(rng) * 0.2;
        double vr = 1.0 + unit(rng) * 2.0;
        for (int k = 0; k < knots; ++k) {
            grid.vr_map.push_back({c, vr});
            c += 0.05 + unit(rng) * 0.2;
            vr -= 0.05 + unit(rng) * 0.4;
        }
        validate(grid);
        double c1 = unit(rng), c2 = unit(rng);
        if (c1 > c2) std::swap(c1, c2);
        CAPTURE(iter);
        CHECK(classify(0.5, c1, grid).vr_percent >= classify(0.5, c2, grid).vr_percent);
    }
}

TEST_CASE("kerogen type ordering is monotone in a") {
    auto proneness = [](KerogenType t) {
        switch (t) {
            case KerogenType::IV: return 0;
            case KerogenType::III: return 1;
            case KerogenType::II: return 2;
            case KerogenType::I: return 3;
        }
        return -1;
    };
    int last = 0;
    for (double a = 0.0; a <= 1.0; a += 0.01) {
        const int now = proneness(classify(a, 0.5, {}).kerogen_type);
        CHECK(now >= last);
        last = now;
    }
}

TEST_CASE("vr interpolation clamps outside the knot range and into [0, 4]") {
    CHECK(classify(0.5, 0.95, {}).vr_percent == 0.0); // beyond the last default knot
    ClassificationGrid grid;
    grid.vr_map = {{0.0, 9.0}, {1.0, 5.0}};
    CHECK(classify(0.5, 0.0, grid).vr_percent == 4.0); // clamped to the VR ceiling
}

TEST_CASE("grid validation rejects malformed configurations") {
    ClassificationGrid grid;
    grid.kerogen_a_breaks = {0.5, 0.5, 0.8};
    CHECK(thrown_code([&] { validate(grid); }) == ErrorCode::InvalidConfig);

    grid = {};
    grid.vr_map = {{0.0, 0.9}};
    CHECK(thrown_code([&] { validate(grid); }) == ErrorCode::InvalidConfig);

    grid = {};
    grid.vr_map = {{0.0, 0.5}, {0.5, 0.9}}; // vr increasing
    CHECK(thrown_code([&] { validate(grid); }) == ErrorCode::InvalidConfig);

    grid = {};
    CHECK(thrown_code([&] { classify(1.2, 0.5, grid); }) == ErrorCode::InvalidArgument);
}
