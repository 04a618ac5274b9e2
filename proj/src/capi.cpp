#include "ftirqc/ftirqc.h"

#include <cmath>
#include <cstring>
#include <string>

#include "core/analysis.hpp"
#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/spectrum_io.hpp"
#include "core/version.hpp"

struct ftirqc_spectrum {
    ftirqc::Spectrum value;
};

struct ftirqc_options {
    ftirqc::AnalysisOptions value;
};

struct ftirqc_report {
    ftirqc::AnalysisReport value;
    std::string json;
    std::string text;
};

namespace {

thread_local std::string g_last_error;

ftirqc_status map_code(ftirqc::ErrorCode code) {
    using ftirqc::ErrorCode;
    switch (code) {
        case ErrorCode::Io: return FTIRQC_E_IO;
        case ErrorCode::MalformedRow: return FTIRQC_E_MALFORMED_ROW;
        case ErrorCode::DuplicateWavenumber: return FTIRQC_E_DUPLICATE_WAVENUMBER;
        case ErrorCode::TooFewPoints: return FTIRQC_E_TOO_FEW_POINTS;
        case ErrorCode::NonFiniteValue: return FTIRQC_E_NON_FINITE_VALUE;
        case ErrorCode::UnsupportedEncoding: return FTIRQC_E_UNSUPPORTED_ENCODING;
        case ErrorCode::MissingRecord: return FTIRQC_E_MISSING_RECORD;
        case ErrorCode::PointCountMismatch: return FTIRQC_E_POINT_COUNT_MISMATCH;
        case ErrorCode::UnsupportedXUnits: return FTIRQC_E_UNSUPPORTED_X_UNITS;
        case ErrorCode::StepTooLarge: return FTIRQC_E_STEP_TOO_LARGE;
        case ErrorCode::WindowTooLarge: return FTIRQC_E_WINDOW_TOO_LARGE;
        case ErrorCode::WindowOutOfRange: return FTIRQC_E_WINDOW_OUT_OF_RANGE;
        case ErrorCode::ZeroDenominator: return FTIRQC_E_ZERO_DENOMINATOR;
        case ErrorCode::OverUnity: return FTIRQC_E_OVER_UNITY;
        case ErrorCode::InvalidSpectrum: return FTIRQC_E_INVALID_SPECTRUM;
        case ErrorCode::InvalidConfig: return FTIRQC_E_INVALID_CONFIG;
        case ErrorCode::InvalidArgument: return FTIRQC_E_INVALID_ARGUMENT;
    }
    return FTIRQC_E_UNKNOWN;
}

ftirqc_status fail(ftirqc_status status, const char* message) {
    g_last_error = message;
    return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
ftirqc_status guarded(Fn&& fn) {
    try {
        fn();
        return FTIRQC_OK;
    } catch (const ftirqc::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FTIRQC_E_UNKNOWN;
    } catch (...) {
        g_last_error = "unknown failure";
        return FTIRQC_E_UNKNOWN;
    }
}

std::optional<ftirqc::YUnit> from_c_unit(ftirqc_y_unit unit) {
    switch (unit) {
        case FTIRQC_Y_TRANSMITTANCE_PERCENT: return ftirqc::YUnit::TransmittancePercent;
        case FTIRQC_Y_TRANSMITTANCE_FRACTION: return ftirqc::YUnit::TransmittanceFraction;
        case FTIRQC_Y_ABSORBANCE: return ftirqc::YUnit::Absorbance;
        case FTIRQC_Y_UNSPECIFIED: return std::nullopt;
    }
    ftirqc::raise(ftirqc::ErrorCode::InvalidArgument, "bad y-unit value");
}

std::optional<ftirqc::FileFormat> from_format_string(const char* format) {
    if (format == nullptr) return std::nullopt;
    std::string f(format);
    if (f == "csv") return ftirqc::FileFormat::Csv;
    if (f == "jcamp" || f == "jdx" || f == "dx") return ftirqc::FileFormat::Jcamp;
    ftirqc::raise(ftirqc::ErrorCode::InvalidArgument, "unknown format '" + f + "'");
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ftirqc::ProximateComposition composition_from_arrays(const double values[5],
                                                     const double uncertainties[5]) {
    if (values == nullptr)
        ftirqc::raise(ftirqc::ErrorCode::InvalidArgument, "values must not be NULL");
    const double* u = uncertainties;
    return ftirqc::make_composition(values[0], values[1], values[2], values[3], values[4],
                                    u ? u[0] : 0.0, u ? u[1] : 0.0, u ? u[2] : 0.0,
                                    u ? u[3] : 0.0, u ? u[4] : 0.0);
}

} // namespace

extern "C" {

const char* ftirqc_version(void) { return ftirqc::kToolVersion; }

const char* ftirqc_status_name(ftirqc_status status) {
    switch (status) {
        case FTIRQC_OK: return "ok";
        case FTIRQC_E_IO: return "Io";
        case FTIRQC_E_MALFORMED_ROW: return "MalformedRow";
        case FTIRQC_E_DUPLICATE_WAVENUMBER: return "DuplicateWavenumber";
        case FTIRQC_E_TOO_FEW_POINTS: return "TooFewPoints";
        case FTIRQC_E_NON_FINITE_VALUE: return "NonFiniteValue";
        case FTIRQC_E_UNSUPPORTED_ENCODING: return "UnsupportedEncoding";
        case FTIRQC_E_MISSING_RECORD: return "MissingRecord";
        case FTIRQC_E_POINT_COUNT_MISMATCH: return "PointCountMismatch";
        case FTIRQC_E_UNSUPPORTED_X_UNITS: return "UnsupportedXUnits";
        case FTIRQC_E_INVALID_SPECTRUM: return "InvalidSpectrum";
        case FTIRQC_E_STEP_TOO_LARGE: return "StepTooLarge";
        case FTIRQC_E_WINDOW_TOO_LARGE: return "WindowTooLarge";
        case FTIRQC_E_WINDOW_OUT_OF_RANGE: return "WindowOutOfRange";
        case FTIRQC_E_ZERO_DENOMINATOR: return "ZeroDenominator";
        case FTIRQC_E_OVER_UNITY: return "OverUnity";
        case FTIRQC_E_INVALID_CONFIG: return "InvalidConfig";
        case FTIRQC_E_INVALID_ARGUMENT: return "InvalidArgument";
        case FTIRQC_E_UNKNOWN: return "Unknown";
    }
    return "Unknown";
}

const char* ftirqc_last_error(void) { return g_last_error.c_str(); }

void ftirqc_string_free(char* s) { delete[] s; }

/* ------------------------------------------------------------------ */

ftirqc_status ftirqc_spectrum_parse_csv(const char* data, size_t size,
                                        ftirqc_y_unit unit_override, ftirqc_spectrum** out) {
    if (!data || !out) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        *out = new ftirqc_spectrum{
            ftirqc::parse_csv(std::string_view(data, size), from_c_unit(unit_override))};
    });
}

ftirqc_status ftirqc_spectrum_parse_jcamp(const char* data, size_t size,
                                          ftirqc_y_unit unit_override, ftirqc_spectrum** out) {
    if (!data || !out) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        *out = new ftirqc_spectrum{
            ftirqc::parse_jcamp(std::string_view(data, size), from_c_unit(unit_override))};
    });
}

ftirqc_status ftirqc_spectrum_read_file(const char* path, const char* format,
                                        ftirqc_y_unit unit_override, ftirqc_spectrum** out) {
    if (!path || !out) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        *out = new ftirqc_spectrum{ftirqc::read_spectrum_file(path, from_format_string(format),
                                                              from_c_unit(unit_override))};
    });
}

ftirqc_status ftirqc_spectrum_write_csv(const ftirqc_spectrum* s, char** out) {
    if (!s || !out) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] { *out = copy_string(ftirqc::write_csv(s->value)); });
}

ftirqc_status ftirqc_spectrum_write_jcamp(const ftirqc_spectrum* s, char** out) {
    if (!s || !out) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] { *out = copy_string(ftirqc::write_jcamp(s->value)); });
}

ftirqc_status ftirqc_spectrum_write_file(const ftirqc_spectrum* s, const char* path,
                                         const char* format) {
    if (!s || !path) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        auto fmt = from_format_string(format);
        ftirqc::write_spectrum_file(s->value, path, fmt.value_or(ftirqc::FileFormat::Csv));
    });
}

ftirqc_status ftirqc_spectrum_to_absorbance(const ftirqc_spectrum* s, ftirqc_spectrum** out) {
    if (!s || !out) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] { *out = new ftirqc_spectrum{ftirqc::to_absorbance(s->value)}; });
}

size_t ftirqc_spectrum_size(const ftirqc_spectrum* s) { return s ? s->value.size() : 0; }

ftirqc_status ftirqc_spectrum_point(const ftirqc_spectrum* s, size_t index, double* x, double* y) {
    if (!s || !x || !y) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    if (index >= s->value.size()) return fail(FTIRQC_E_INVALID_ARGUMENT, "index out of range");
    *x = s->value.x[index];
    *y = s->value.y[index];
    return FTIRQC_OK;
}

ftirqc_y_unit ftirqc_spectrum_y_unit(const ftirqc_spectrum* s) {
    if (!s) return FTIRQC_Y_UNSPECIFIED;
    switch (s->value.y_unit) {
        case ftirqc::YUnit::TransmittancePercent: return FTIRQC_Y_TRANSMITTANCE_PERCENT;
        case ftirqc::YUnit::TransmittanceFraction: return FTIRQC_Y_TRANSMITTANCE_FRACTION;
        case ftirqc::YUnit::Absorbance: return FTIRQC_Y_ABSORBANCE;
    }
    return FTIRQC_Y_UNSPECIFIED;
}

const char* ftirqc_spectrum_id(const ftirqc_spectrum* s) { return s ? s->value.id.c_str() : ""; }

ftirqc_status ftirqc_spectrum_set_id(ftirqc_spectrum* s, const char* id) {
    if (!s || !id) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    s->value.id = id;
    return FTIRQC_OK;
}

void ftirqc_spectrum_free(ftirqc_spectrum* s) { delete s; }

/* ------------------------------------------------------------------ */

ftirqc_options* ftirqc_options_new(void) { return new ftirqc_options{}; }

void ftirqc_options_free(ftirqc_options* options) { delete options; }

ftirqc_status ftirqc_options_set(ftirqc_options* options, const char* key, const char* value) {
    if (!options || !key || !value) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        ftirqc::AnalysisOptions& o = options->value;
        std::string k(key);
        auto number = [&](const char* what) {
            try {
                std::size_t used = 0;
                const double v = std::stod(value, &used);
                if (used != std::strlen(value)) throw std::invalid_argument(what);
                return v;
            } catch (...) {
                ftirqc::raise(ftirqc::ErrorCode::InvalidArgument,
                              std::string("cannot parse number for ") + what);
            }
        };
        auto boolean = [&](const char* what) {
            const std::string v(value);
            if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
            if (v == "false" || v == "0" || v == "no" || v == "off") return false;
            ftirqc::raise(ftirqc::ErrorCode::InvalidArgument,
                          std::string(what) + " must be a boolean");
        };
        if (k == "grid_step" || k == "smooth" || k == "smooth_window" ||
            k == "smooth_poly_order" || k == "baseline_method") {
            ftirqc::PreprocessConfig merged = o.preprocess;
            auto integer = [&](const char* what) {
                const double v = number(what);
                if (v != std::floor(v))
                    ftirqc::raise(ftirqc::ErrorCode::InvalidArgument,
                                  std::string(what) + " must be an integer");
                return static_cast<int>(v);
            };
            if (k == "grid_step") merged.grid_step = number("grid_step");
            if (k == "smooth") merged.smooth_enabled = boolean("smooth");
            if (k == "smooth_window") merged.smooth_window = integer("smooth_window");
            if (k == "smooth_poly_order") merged.smooth_poly_order = integer("smooth_poly_order");
            if (k == "baseline_method") {
                auto method = ftirqc::baseline_method_from_token(value);
                if (!method)
                    ftirqc::raise(ftirqc::ErrorCode::InvalidConfig,
                                  "unknown baseline_method '" + std::string(value) + "'");
                merged.baseline_method = *method;
            }
            ftirqc::validate(merged); // only the merged config has to be coherent
            o.preprocess = merged;
            return;
        }
        if (k == "half_width") {
            const double v = number("half_width");
            if (!(v > 0.0))
                ftirqc::raise(ftirqc::ErrorCode::InvalidArgument, "half_width must be > 0");
            o.half_width = v;
        } else if (k == "qc_threshold") {
            const double v = number("qc_threshold");
            if (!(v >= 0.0))
                ftirqc::raise(ftirqc::ErrorCode::InvalidArgument, "qc_threshold must be >= 0");
            o.qc_threshold = v;
        } else if (k == "peak_min_prominence_rel") {
            const double v = number("peak_min_prominence_rel");
            if (!(v >= 0.0))
                ftirqc::raise(ftirqc::ErrorCode::InvalidArgument,
                              "peak_min_prominence_rel must be >= 0");
            o.peak_min_prominence_rel = v;
        } else if (k == "aqueous") {
            o.aqueous = boolean("aqueous");
        } else {
            ftirqc::raise(ftirqc::ErrorCode::InvalidArgument, "unknown option key '" + k + "'");
        }
    });
}

ftirqc_status ftirqc_options_load_preprocess(ftirqc_options* options, const char* path) {
    if (!options || !path) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        ftirqc::PreprocessConfig cfg =
            ftirqc::parse_preprocess_config(ftirqc::read_text_file(path));
        options->value.preprocess = cfg;
        options->value.preprocess_source = path;
    });
}

ftirqc_status ftirqc_options_load_grid(ftirqc_options* options, const char* path) {
    if (!options || !path) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        options->value.grid = ftirqc::parse_grid_config(ftirqc::read_text_file(path));
        options->value.grid_source = path;
    });
}

ftirqc_status ftirqc_options_load_bands(ftirqc_options* options, const char* path) {
    if (!options || !path) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        options->value.bands = ftirqc::parse_band_table(ftirqc::read_text_file(path));
        options->value.band_source = path;
    });
}

ftirqc_status ftirqc_options_set_composition(ftirqc_options* options, const double values[5],
                                             const double uncertainties[5], double tol) {
    if (!options) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        if (!(tol >= 0.0))
            ftirqc::raise(ftirqc::ErrorCode::InvalidArgument, "tol must be >= 0");
        options->value.composition = composition_from_arrays(values, uncertainties);
        options->value.composition_tol = tol;
    });
}

ftirqc_status ftirqc_options_load_composition(ftirqc_options* options, const char* path) {
    if (!options || !path) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        options->value.composition = ftirqc::parse_composition(ftirqc::read_text_file(path));
    });
}

/* ------------------------------------------------------------------ */

namespace {

ftirqc_report* build_report(ftirqc::AnalysisReport&& value) {
    auto* report = new ftirqc_report{std::move(value), {}, {}};
    report->json = ftirqc::report_json(report->value);
    report->text = ftirqc::report_text(report->value);
    return report;
}

} // namespace

ftirqc_status ftirqc_analyze(const ftirqc_spectrum* s, const ftirqc_options* options,
                             ftirqc_report** out) {
    if (!s || !out) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        static const ftirqc::AnalysisOptions defaults;
        *out = build_report(
            ftirqc::analyze_spectrum(s->value, options ? options->value : defaults));
    });
}

ftirqc_status ftirqc_qc(const ftirqc_spectrum* s, const ftirqc_options* options,
                        ftirqc_report** out) {
    if (!s || !out) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        static const ftirqc::AnalysisOptions defaults;
        *out = build_report(ftirqc::qc_spectrum(s->value, options ? options->value : defaults));
    });
}

const char* ftirqc_report_json(const ftirqc_report* report) {
    return report ? report->json.c_str() : "";
}

const char* ftirqc_report_text(const ftirqc_report* report) {
    return report ? report->text.c_str() : "";
}

ftirqc_status ftirqc_report_value(const ftirqc_report* report, const char* key, double* out) {
    if (!report || !key || !out) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    const std::string k(key);
    const ftirqc::AnalysisReport& r = report->value;
    if (r.factors) {
        const ftirqc::FactorResult& f = *r.factors;
        if (k == "a_factor") { *out = f.a_factor; return FTIRQC_OK; }
        if (k == "c_factor") { *out = f.c_factor; return FTIRQC_OK; }
        if (k == "h2930") { *out = f.h2930; return FTIRQC_OK; }
        if (k == "h2860") { *out = f.h2860; return FTIRQC_OK; }
        if (k == "h1705") { *out = f.h1705; return FTIRQC_OK; }
        if (k == "h1630") { *out = f.h1630; return FTIRQC_OK; }
    }
    if (r.maturity && k == "vr_percent") { *out = r.maturity->vr_percent; return FTIRQC_OK; }
    if (r.verdict) {
        if (k == "qc_threshold") { *out = r.verdict->threshold_used; return FTIRQC_OK; }
        if (k == "qc_global_max") { *out = r.verdict->global_max; return FTIRQC_OK; }
    }
    return fail(FTIRQC_E_INVALID_ARGUMENT, "field not present in this report");
}

const char* ftirqc_report_string(const ftirqc_report* report, const char* key) {
    if (!report || !key) return nullptr;
    const std::string k(key);
    const ftirqc::AnalysisReport& r = report->value;
    if (k == "mode") return r.mode.c_str();
    if (k == "spectrum_id") return r.spectrum_id.c_str();
    if (r.maturity) {
        if (k == "kerogen_type") return ftirqc::kerogen_type_name(r.maturity->kerogen_type);
        if (k == "maturity_level") return ftirqc::maturity_level_name(r.maturity->maturity_level);
        if (k == "oil_intensity") return r.maturity->oil_intensity.c_str();
    }
    if (r.verdict && k == "separation_status")
        return r.verdict->status == ftirqc::SeparationStatus::Complete ? "Complete" : "Incomplete";
    return nullptr;
}

int ftirqc_report_separation_complete(const ftirqc_report* report) {
    if (!report || !report->value.verdict) return -1;
    return report->value.verdict->status == ftirqc::SeparationStatus::Complete ? 1 : 0;
}

ftirqc_status ftirqc_report_processed_spectrum(const ftirqc_report* report,
                                               ftirqc_spectrum** out) {
    if (!report || !out) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] { *out = new ftirqc_spectrum{report->value.processed}; });
}

void ftirqc_report_free(ftirqc_report* report) { delete report; }

/* ------------------------------------------------------------------ */

ftirqc_status ftirqc_fixed_carbon(double mc, double vs, double ac, double* out) {
    if (!out) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] { *out = ftirqc::fixed_carbon(mc, vs, ac); });
}

namespace {

void emit_proximate(const ftirqc::ProximateComposition& p, double tol, char** json_out,
                    char** text_out, int* closure_ok) {
    if (!(tol >= 0.0)) ftirqc::raise(ftirqc::ErrorCode::InvalidArgument, "tol must be >= 0");
    const auto violations = ftirqc::validate_composition(p, tol);
    if (json_out) *json_out = copy_string(ftirqc::proximate_json(p, violations, tol));
    if (text_out) *text_out = copy_string(ftirqc::proximate_text(p, violations, tol));
    if (closure_ok) *closure_ok = violations.empty() ? 1 : 0;
}

} // namespace

ftirqc_status ftirqc_proximate_report(const double values[5], const double uncertainties[5],
                                      double tol, char** json_out, char** text_out,
                                      int* closure_ok) {
    return guarded([&] {
        emit_proximate(composition_from_arrays(values, uncertainties), tol, json_out, text_out,
                       closure_ok);
    });
}

ftirqc_status ftirqc_proximate_report_file(const char* path, double tol, char** json_out,
                                           char** text_out, int* closure_ok) {
    if (!path) return fail(FTIRQC_E_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        emit_proximate(ftirqc::parse_composition(ftirqc::read_text_file(path)), tol, json_out,
                       text_out, closure_ok);
    });
}

} // extern "C"
