/*
 * ftirqc — FTIR-based characterization of hydrothermal-liquefaction
 * biocrude and aqueous-phase samples.
 *
 * C API over the C++ core: opaque handles, status-code returns, and a
 * per-thread error message. Every object returned through an out-parameter
 * is owned by the caller and released with the matching *_free function;
 * const char* returns are owned by the library or the handle they came from
 * and stay valid until that handle is freed.
 */

#ifndef FTIRQC_H
#define FTIRQC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef FTIRQC_API
#if defined(_WIN32)
#define FTIRQC_API __declspec(dllexport)
#else
#define FTIRQC_API __attribute__((visibility("default")))
#endif
#endif

typedef enum ftirqc_status {
    FTIRQC_OK = 0,
    /* input / parse failures */
    FTIRQC_E_IO = 1,
    FTIRQC_E_MALFORMED_ROW = 2,
    FTIRQC_E_DUPLICATE_WAVENUMBER = 3,
    FTIRQC_E_TOO_FEW_POINTS = 4,
    FTIRQC_E_NON_FINITE_VALUE = 5,
    FTIRQC_E_UNSUPPORTED_ENCODING = 6,
    FTIRQC_E_MISSING_RECORD = 7,
    FTIRQC_E_POINT_COUNT_MISMATCH = 8,
    FTIRQC_E_UNSUPPORTED_X_UNITS = 9,
    FTIRQC_E_INVALID_SPECTRUM = 10,
    /* analysis failures */
    FTIRQC_E_STEP_TOO_LARGE = 11,
    FTIRQC_E_WINDOW_TOO_LARGE = 12,
    FTIRQC_E_WINDOW_OUT_OF_RANGE = 13,
    FTIRQC_E_ZERO_DENOMINATOR = 14,
    FTIRQC_E_OVER_UNITY = 15,
    /* usage failures */
    FTIRQC_E_INVALID_CONFIG = 16,
    FTIRQC_E_INVALID_ARGUMENT = 17,
    FTIRQC_E_UNKNOWN = 127
} ftirqc_status;

typedef enum ftirqc_y_unit {
    FTIRQC_Y_UNSPECIFIED = -1,
    FTIRQC_Y_TRANSMITTANCE_PERCENT = 0,
    FTIRQC_Y_TRANSMITTANCE_FRACTION = 1,
    FTIRQC_Y_ABSORBANCE = 2
} ftirqc_y_unit;

typedef struct ftirqc_spectrum ftirqc_spectrum;
typedef struct ftirqc_options ftirqc_options;
typedef struct ftirqc_report ftirqc_report;

/* ------------------------------------------------------------------ */
/* Library                                                            */

FTIRQC_API const char* ftirqc_version(void);
FTIRQC_API const char* ftirqc_status_name(ftirqc_status status);

/* Message describing the last failure on the calling thread. */
FTIRQC_API const char* ftirqc_last_error(void);

/* Frees strings returned through char** out-parameters. */
FTIRQC_API void ftirqc_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Spectra                                                            */

/* Parse from memory. unit_override forces the y unit; pass
 * FTIRQC_Y_UNSPECIFIED to use the file's own declaration (CSV header token
 * or JCAMP ##YUNITS; unlabeled CSV defaults to percent transmittance). */
FTIRQC_API ftirqc_status ftirqc_spectrum_parse_csv(const char* data, size_t size,
                                                   ftirqc_y_unit unit_override,
                                                   ftirqc_spectrum** out);
FTIRQC_API ftirqc_status ftirqc_spectrum_parse_jcamp(const char* data, size_t size,
                                                     ftirqc_y_unit unit_override,
                                                     ftirqc_spectrum** out);

/* Read from a file. format is "csv", "jcamp" or NULL to sniff. */
FTIRQC_API ftirqc_status ftirqc_spectrum_read_file(const char* path, const char* format,
                                                   ftirqc_y_unit unit_override,
                                                   ftirqc_spectrum** out);

FTIRQC_API ftirqc_status ftirqc_spectrum_write_csv(const ftirqc_spectrum* s, char** out);
FTIRQC_API ftirqc_status ftirqc_spectrum_write_jcamp(const ftirqc_spectrum* s, char** out);
FTIRQC_API ftirqc_status ftirqc_spectrum_write_file(const ftirqc_spectrum* s, const char* path,
                                                    const char* format);

/* A = -log10(T); percent transmittance is divided by 100 first; T is
 * clamped below at 1e-6 (absorbance cap 6.0). Identity on absorbance. */
FTIRQC_API ftirqc_status ftirqc_spectrum_to_absorbance(const ftirqc_spectrum* s,
                                                       ftirqc_spectrum** out);

FTIRQC_API size_t ftirqc_spectrum_size(const ftirqc_spectrum* s);
FTIRQC_API ftirqc_status ftirqc_spectrum_point(const ftirqc_spectrum* s, size_t index, double* x,
                                               double* y);
FTIRQC_API ftirqc_y_unit ftirqc_spectrum_y_unit(const ftirqc_spectrum* s);
FTIRQC_API const char* ftirqc_spectrum_id(const ftirqc_spectrum* s);
FTIRQC_API ftirqc_status ftirqc_spectrum_set_id(ftirqc_spectrum* s, const char* id);
FTIRQC_API void ftirqc_spectrum_free(ftirqc_spectrum* s);

/* ------------------------------------------------------------------ */
/* Options                                                            */

/* Fresh options carry the built-in defaults: 2 cm^-1 grid, rubber-band
 * baseline, smoothing off, +-10 cm^-1 diagnostic windows, single-anchor
 * classification grid, 0.05 separation threshold. */
FTIRQC_API ftirqc_options* ftirqc_options_new(void);
FTIRQC_API void ftirqc_options_free(ftirqc_options* options);

/* Keys: grid_step, smooth (bool), smooth_window, smooth_poly_order,
 * baseline_method (rubberband|linear_endpoints|none), half_width,
 * qc_threshold, peak_min_prominence_rel, aqueous (bool). */
FTIRQC_API ftirqc_status ftirqc_options_set(ftirqc_options* options, const char* key,
                                            const char* value);

/* Config-file loaders; the file path is echoed into reports. */
FTIRQC_API ftirqc_status ftirqc_options_load_preprocess(ftirqc_options* options, const char* path);
FTIRQC_API ftirqc_status ftirqc_options_load_grid(ftirqc_options* options, const char* path);
FTIRQC_API ftirqc_status ftirqc_options_load_bands(ftirqc_options* options, const char* path);

/* values = {mc, ts, vs, ac, fc}; pass NaN for ts/fc to derive them.
 * uncertainties may be NULL. */
FTIRQC_API ftirqc_status ftirqc_options_set_composition(ftirqc_options* options,
                                                        const double values[5],
                                                        const double uncertainties[5], double tol);
FTIRQC_API ftirqc_status ftirqc_options_load_composition(ftirqc_options* options,
                                                         const char* path);

/* ------------------------------------------------------------------ */
/* Analysis                                                           */

/* Full pipeline: absorbance conversion, resampling, optional smoothing,
 * baseline correction, diagnostic band heights, A/C factors, kerogen and
 * maturity classification, peak detection with band assignment. */
FTIRQC_API ftirqc_status ftirqc_analyze(const ftirqc_spectrum* s, const ftirqc_options* options,
                                        ftirqc_report** out);

/* Separation QC for aqueous-phase samples: same preprocessing, then the
 * carbon-chain window check. */
FTIRQC_API ftirqc_status ftirqc_qc(const ftirqc_spectrum* s, const ftirqc_options* options,
                                   ftirqc_report** out);

FTIRQC_API const char* ftirqc_report_json(const ftirqc_report* report);
FTIRQC_API const char* ftirqc_report_text(const ftirqc_report* report);

/* Numeric fields: a_factor, c_factor, vr_percent, h2930, h2860, h1705,
 * h1630, qc_threshold, qc_global_max. Returns FTIRQC_E_INVALID_ARGUMENT if
 * the field is absent from this report. */
FTIRQC_API ftirqc_status ftirqc_report_value(const ftirqc_report* report, const char* key,
                                             double* out);

/* String fields: mode, spectrum_id, kerogen_type, maturity_level,
 * oil_intensity, separation_status. NULL if absent. */
FTIRQC_API const char* ftirqc_report_string(const ftirqc_report* report, const char* key);

/* 1 = Complete, 0 = Incomplete, -1 = report carries no verdict. */
FTIRQC_API int ftirqc_report_separation_complete(const ftirqc_report* report);

/* The resampled, baseline-corrected absorbance spectrum the numbers were
 * measured on (for plotting / export). */
FTIRQC_API ftirqc_status ftirqc_report_processed_spectrum(const ftirqc_report* report,
                                                          ftirqc_spectrum** out);
FTIRQC_API void ftirqc_report_free(ftirqc_report* report);

/* ------------------------------------------------------------------ */
/* Proximate analysis                                                 */

/* fc = 100 - (mc + vs + ac); FTIRQC_E_OVER_UNITY when the sum passes 100. */
FTIRQC_API ftirqc_status ftirqc_fixed_carbon(double mc, double vs, double ac, double* out);

/* values/uncertainties as in ftirqc_options_set_composition. Either of
 * json_out/text_out may be NULL. closure_ok (nullable) receives 1 when both
 * closure identities hold within tol. */
FTIRQC_API ftirqc_status ftirqc_proximate_report(const double values[5],
                                                 const double uncertainties[5], double tol,
                                                 char** json_out, char** text_out,
                                                 int* closure_ok);

/* Same, reading the composition from a key=value file. */
FTIRQC_API ftirqc_status ftirqc_proximate_report_file(const char* path, double tol,
                                                      char** json_out, char** text_out,
                                                      int* closure_ok);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FTIRQC_H */
