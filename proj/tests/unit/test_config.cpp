#include <doctest.h>

#include "core/config.hpp"
#include "core/errors.hpp"
#include "support/fixtures.hpp"

using namespace ftirqc;
using fixtures::thrown_code;

TEST_CASE("preprocess config: empty text keeps the defaults") {
    const PreprocessConfig cfg = parse_preprocess_config("");
    CHECK(cfg.grid_step == 2.0);
    CHECK(cfg.smooth_window == 9);
    CHECK(cfg.smooth_poly_order == 2);
    CHECK(cfg.baseline_method == BaselineMethod::RubberBand);
    CHECK(cfg.smooth_enabled == false);
}

TEST_CASE("preprocess config: full file") {
    const PreprocessConfig cfg = parse_preprocess_config(
        "# preprocessing\n"
        "grid_step = 4.0\n"
        "smooth = true\n"
        "smooth_window = 11\n"
        "smooth_poly_order = 3\n"
        "baseline_method = linear_endpoints\n");
    CHECK(cfg.grid_step == 4.0);
    CHECK(cfg.smooth_enabled == true);
    CHECK(cfg.smooth_window == 11);
    CHECK(cfg.smooth_poly_order == 3);
    CHECK(cfg.baseline_method == BaselineMethod::LinearEndpoints);
}

TEST_CASE("preprocess config: rejects bad input") {
    CHECK(thrown_code([] { parse_preprocess_config("grid_stepp = 2\n"); }) ==
          ErrorCode::InvalidConfig);
    CHECK(thrown_code([] { parse_preprocess_config("smooth_window = 8\n"); }) ==
          ErrorCode::InvalidConfig);
    CHECK(thrown_code([] { parse_preprocess_config("baseline_method = spline\n"); }) ==
          ErrorCode::InvalidConfig);
    CHECK(thrown_code([] { parse_preprocess_config("grid_step = 2\ngrid_step = 3\n"); }) ==
          ErrorCode::InvalidConfig);
    CHECK(thrown_code([] { parse_preprocess_config("no equals sign\n"); }) ==
          ErrorCode::InvalidConfig);
}

TEST_CASE("grid config: overrides and defaults coexist") {
    const ClassificationGrid grid = parse_grid_config(
        "kerogen_a_breaks = 0.25, 0.5, 0.75\n"
        "vr_map = 0.0:1.2, 0.5:0.6, 1.0:0.1\n"
        "maturity_breaks = 0.5, 0.9, 1.3\n");
    CHECK(grid.kerogen_a_breaks == std::array<double, 3>{0.25, 0.5, 0.75});
    REQUIRE(grid.vr_map.size() == 3);
    CHECK(grid.vr_map[1].c == 0.5);
    CHECK(grid.vr_map[1].vr == 0.6);
    CHECK(grid.maturity_breaks == std::array<double, 3>{0.5, 0.9, 1.3});

    const ClassificationGrid defaults = parse_grid_config("");
    CHECK(defaults.kerogen_a_breaks == std::array<double, 3>{0.30, 0.55, 0.80});
    CHECK(defaults.vr_map.size() == 2);
}

TEST_CASE("grid config: malformed input is rejected") {
    CHECK(thrown_code([] { parse_grid_config("kerogen_a_breaks = 0.3, 0.5\n"); }) ==
          ErrorCode::InvalidConfig);
    CHECK(thrown_code([] { parse_grid_config("vr_map = 0.0:0.9\n"); }) == ErrorCode::InvalidConfig);
    CHECK(thrown_code([] { parse_grid_config("vr_map = 0.0:0.9, 0.5-0.2\n"); }) ==
          ErrorCode::InvalidConfig);
    CHECK(thrown_code([] { parse_grid_config("vr_map = 0.0:0.2, 0.5:0.9\n"); }) ==
          ErrorCode::InvalidConfig);
}

TEST_CASE("band table: four and five column rows") {
    const auto table = parse_band_table(
        "# label, lo, hi, group[, vibration]\n"
        "aromatic C=C, 1500, 1600, aromatics\n"
        "hydroxyl O-H, 3200, 3550, alcohols and water, O-H stretch\n");
    REQUIRE(table.size() == 2);
    CHECK(table[0].label == "aromatic C=C");
    CHECK(table[0].lo == 1500.0);
    CHECK(table[0].hi == 1600.0);
    CHECK(table[0].vibration.empty());
    CHECK(table[1].vibration == "O-H stretch");
}

TEST_CASE("band table: rejects bad rows") {
    CHECK(thrown_code([] { parse_band_table("only, three, columns\n"); }) ==
          ErrorCode::InvalidConfig);
    CHECK(thrown_code([] { parse_band_table("x, 1600, 1500, swapped\n"); }) ==
          ErrorCode::InvalidConfig);
    CHECK(thrown_code([] { parse_band_table("x, 700, 900, below range\n"); }) ==
          ErrorCode::InvalidConfig);
    CHECK(thrown_code([] { parse_band_table("\n# nothing\n"); }) == ErrorCode::InvalidConfig);
}

TEST_CASE("composition file: reference values with uncertainties") {
    const ProximateComposition p = parse_composition(
        "mc = 88.7\n"
        "ts = 11.3\n"
        "vs = 7.2\n"
        "ac = 2.3\n"
        "fc = 1.8\n"
        "u_mc = 0.6\nu_ts = 0.5\nu_vs = 0.4\nu_ac = 0.1\nu_fc = 0.2\n");
    CHECK(p.mc == 88.7);
    CHECK(p.fc == 1.8);
    CHECK(p.u_ac == 0.1);
    CHECK(validate_composition(p, 0.5).empty());
}

TEST_CASE("composition file: ts and fc are derived when omitted") {
    const ProximateComposition p = parse_composition("mc = 88.7\nvs = 7.2\nac = 2.3\n");
    CHECK(p.ts == doctest::Approx(11.3).epsilon(1e-12));
    CHECK(p.fc == doctest::Approx(1.8).epsilon(1e-12));
}

TEST_CASE("composition file: unknown or missing keys are rejected") {
    CHECK(thrown_code([] { parse_composition("mc = 88.7\nvs = 7.2\nac = 2.3\nmoist = 1\n"); }) ==
          ErrorCode::InvalidConfig);
    CHECK(thrown_code([] { parse_composition("mc = 88.7\nvs = 7.2\n"); }) ==
          ErrorCode::InvalidConfig);
}
