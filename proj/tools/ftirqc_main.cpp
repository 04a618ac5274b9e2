// ftirqc command-line tool. Talks to the library exclusively through the
// public C API so it doubles as a smoke test of the shared-library surface.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ftirqc/ftirqc.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParseError = 1;
constexpr int kExitAnalysisError = 2;
constexpr int kExitIncomplete = 3;

int exit_code_for(ftirqc_status status) {
    switch (status) {
        case FTIRQC_OK:
            return kExitOk;
        case FTIRQC_E_IO:
        case FTIRQC_E_MALFORMED_ROW:
        case FTIRQC_E_DUPLICATE_WAVENUMBER:
        case FTIRQC_E_TOO_FEW_POINTS:
        case FTIRQC_E_NON_FINITE_VALUE:
        case FTIRQC_E_UNSUPPORTED_ENCODING:
        case FTIRQC_E_MISSING_RECORD:
        case FTIRQC_E_POINT_COUNT_MISMATCH:
        case FTIRQC_E_UNSUPPORTED_X_UNITS:
        case FTIRQC_E_INVALID_SPECTRUM:
            return kExitParseError;
        default:
            return kExitAnalysisError;
    }
}

int report_failure(ftirqc_status status) {
    std::fprintf(stderr, "error: %s: %s\n", ftirqc_status_name(status), ftirqc_last_error());
    return exit_code_for(status);
}

// RAII wrappers over the C handles.
struct Spectrum {
    ftirqc_spectrum* handle = nullptr;
    ~Spectrum() { ftirqc_spectrum_free(handle); }
};
struct Options {
    ftirqc_options* handle = ftirqc_options_new();
    ~Options() { ftirqc_options_free(handle); }
};
struct Report {
    ftirqc_report* handle = nullptr;
    ~Report() { ftirqc_report_free(handle); }
};
struct OwnedString {
    char* value = nullptr;
    ~OwnedString() { ftirqc_string_free(value); }
};

struct CommonFlags {
    std::string y_unit;
    std::string format;
    std::string baseline;
    std::string grid_path;
    std::string band_table_path;
    std::string preprocess_path;
    std::optional<double> threshold;
    std::optional<double> grid_step;
    std::optional<double> half_width;
    std::optional<double> min_prominence_rel;
    std::optional<int> smooth_window;
    std::optional<int> smooth_poly_order;
    bool smooth = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--y-unit", flags.y_unit, "Input y unit: percent-t, fraction-t or absorbance")
        ->check(CLI::IsMember({"percent-t", "fraction-t", "absorbance"}));
    cmd->add_option("--format", flags.format, "Input format (csv or jcamp); default: sniffed")
        ->check(CLI::IsMember({"csv", "jcamp"}));
    cmd->add_option("--baseline", flags.baseline,
                    "Baseline method: rubberband, linear_endpoints or none");
    cmd->add_option("--grid", flags.grid_path, "Classification grid config file");
    cmd->add_option("--band-table", flags.band_table_path, "Band table file");
    cmd->add_option("--preprocess", flags.preprocess_path, "Preprocess config file");
    cmd->add_option("--threshold", flags.threshold,
                    "Separation threshold as a fraction of the global maximum");
    cmd->add_option("--grid-step", flags.grid_step, "Resampling step in cm^-1");
    cmd->add_option("--half-width", flags.half_width, "Diagnostic window half-width in cm^-1");
    cmd->add_option("--min-prominence-rel", flags.min_prominence_rel,
                    "Peak detection threshold as a fraction of the global maximum");
    cmd->add_flag("--smooth", flags.smooth, "Enable Savitzky-Golay smoothing");
    cmd->add_option("--smooth-window", flags.smooth_window, "Smoothing window (odd, >= 3)");
    cmd->add_option("--smooth-poly-order", flags.smooth_poly_order, "Smoothing polynomial order");
}

ftirqc_y_unit y_unit_from_flag(const std::string& token) {
    if (token == "percent-t") return FTIRQC_Y_TRANSMITTANCE_PERCENT;
    if (token == "fraction-t") return FTIRQC_Y_TRANSMITTANCE_FRACTION;
    if (token == "absorbance") return FTIRQC_Y_ABSORBANCE;
    return FTIRQC_Y_UNSPECIFIED;
}

#define TRY(call)                                   \
    do {                                            \
        ftirqc_status status_ = (call);             \
        if (status_ != FTIRQC_OK) return status_;   \
    } while (0)

ftirqc_status apply_config_dir(Options& options) {
    const char* dir = std::getenv("FTIRQC_CONFIG_DIR");
    if (!dir || !*dir) return FTIRQC_OK;
    const fs::path base(dir);
    if (fs::exists(base / "preprocess.conf"))
        TRY(ftirqc_options_load_preprocess(options.handle, (base / "preprocess.conf").c_str()));
    if (fs::exists(base / "grid.conf"))
        TRY(ftirqc_options_load_grid(options.handle, (base / "grid.conf").c_str()));
    if (fs::exists(base / "bands.conf"))
        TRY(ftirqc_options_load_bands(options.handle, (base / "bands.conf").c_str()));
    return FTIRQC_OK;
}

ftirqc_status build_options(const CommonFlags& flags, Options& options) {
    TRY(apply_config_dir(options));
    if (!flags.preprocess_path.empty())
        TRY(ftirqc_options_load_preprocess(options.handle, flags.preprocess_path.c_str()));
    if (!flags.grid_path.empty())
        TRY(ftirqc_options_load_grid(options.handle, flags.grid_path.c_str()));
    if (!flags.band_table_path.empty())
        TRY(ftirqc_options_load_bands(options.handle, flags.band_table_path.c_str()));

    auto set_number = [&](const char* key, double v) {
        return ftirqc_options_set(options.handle, key, std::to_string(v).c_str());
    };
    if (!flags.baseline.empty())
        TRY(ftirqc_options_set(options.handle, "baseline_method", flags.baseline.c_str()));
    if (flags.threshold) TRY(set_number("qc_threshold", *flags.threshold));
    if (flags.grid_step) TRY(set_number("grid_step", *flags.grid_step));
    if (flags.half_width) TRY(set_number("half_width", *flags.half_width));
    if (flags.min_prominence_rel)
        TRY(set_number("peak_min_prominence_rel", *flags.min_prominence_rel));
    if (flags.smooth || flags.smooth_window || flags.smooth_poly_order)
        TRY(ftirqc_options_set(options.handle, "smooth", "true"));
    if (flags.smooth_window)
        TRY(ftirqc_options_set(options.handle, "smooth_window",
                               std::to_string(*flags.smooth_window).c_str()));
    if (flags.smooth_poly_order)
        TRY(ftirqc_options_set(options.handle, "smooth_poly_order",
                               std::to_string(*flags.smooth_poly_order).c_str()));
    return FTIRQC_OK;
}

ftirqc_status load_spectrum(const std::string& path, const CommonFlags& flags, Spectrum& s) {
    return ftirqc_spectrum_read_file(path.c_str(), flags.format.empty() ? nullptr
                                                                        : flags.format.c_str(),
                                     y_unit_from_flag(flags.y_unit), &s.handle);
}

bool write_text_file(const fs::path& path, const std::string& content) {
    FILE* f = std::fopen(path.string().c_str(), "wb");
    if (!f) return false;
    const bool ok = std::fwrite(content.data(), 1, content.size(), f) == content.size();
    return std::fclose(f) == 0 && ok;
}

ftirqc_status emit_plot(const Report& report, const std::string& path) {
    Spectrum processed;
    TRY(ftirqc_report_processed_spectrum(report.handle, &processed.handle));
    return ftirqc_spectrum_write_file(processed.handle, path.c_str(), "csv");
}

struct CompositionFlags {
    std::string file;
    std::optional<double> mc, ts, vs, ac, fc;
    std::optional<double> u_mc, u_ts, u_vs, u_ac, u_fc;
    double tol = 0.5;

    bool inline_given() const { return mc || ts || vs || ac || fc; }

    void values(double out[5], double unc[5]) const {
        const double nan = std::nan("");
        out[0] = mc.value_or(nan);
        out[1] = ts.value_or(nan);
        out[2] = vs.value_or(nan);
        out[3] = ac.value_or(nan);
        out[4] = fc.value_or(nan);
        unc[0] = u_mc.value_or(0.0);
        unc[1] = u_ts.value_or(0.0);
        unc[2] = u_vs.value_or(0.0);
        unc[3] = u_ac.value_or(0.0);
        unc[4] = u_fc.value_or(0.0);
    }
};

void add_composition_flags(CLI::App* cmd, CompositionFlags& comp) {
    auto* file = cmd->add_option("--composition", comp.file,
                                 "Proximate composition key=value file");
    // Inline values and a file are alternatives, not a merge.
    auto inline_opt = [&](const char* name, auto& target, const char* help) {
        file->excludes(cmd->add_option(name, target, help));
    };
    inline_opt("--mc", comp.mc, "Moisture content, mass %");
    inline_opt("--ts", comp.ts, "Total solids, mass % (default 100 - mc)");
    inline_opt("--vs", comp.vs, "Volatile solids, mass %");
    inline_opt("--ac", comp.ac, "Ash content, mass %");
    inline_opt("--fc", comp.fc, "Fixed carbon, mass % (default 100 - mc - vs - ac)");
    inline_opt("--u-mc", comp.u_mc, "MC uncertainty");
    inline_opt("--u-ts", comp.u_ts, "TS uncertainty");
    inline_opt("--u-vs", comp.u_vs, "VS uncertainty");
    inline_opt("--u-ac", comp.u_ac, "AC uncertainty");
    inline_opt("--u-fc", comp.u_fc, "FC uncertainty");
    cmd->add_option("--tol", comp.tol, "Closure tolerance, mass % (default 0.5)");
}

ftirqc_status apply_composition(const CompositionFlags& comp, Options& options) {
    if (!comp.file.empty()) {
        TRY(ftirqc_options_load_composition(options.handle, comp.file.c_str()));
        return FTIRQC_OK;
    }
    if (comp.inline_given()) {
        double values[5], unc[5];
        comp.values(values, unc);
        TRY(ftirqc_options_set_composition(options.handle, values, unc, comp.tol));
    }
    return FTIRQC_OK;
}

// ---------------------------------------------------------------------
// Subcommand bodies. Each returns a process exit code.

int run_analyze(const std::string& input, const CommonFlags& flags, const CompositionFlags& comp,
                bool aqueous, bool json_stdout, const std::string& output,
                const std::string& plot_path) {
    Options options;
    ftirqc_status status = build_options(flags, options);
    if (status != FTIRQC_OK) return report_failure(status);
    status = apply_composition(comp, options);
    if (status != FTIRQC_OK) return report_failure(status);
    if (aqueous) {
        status = ftirqc_options_set(options.handle, "aqueous", "true");
        if (status != FTIRQC_OK) return report_failure(status);
    }

    Spectrum spectrum;
    status = load_spectrum(input, flags, spectrum);
    if (status != FTIRQC_OK) return report_failure(status);

    Report report;
    status = ftirqc_analyze(spectrum.handle, options.handle, &report.handle);
    if (status != FTIRQC_OK) return report_failure(status);

    std::fputs(json_stdout ? ftirqc_report_json(report.handle)
                           : ftirqc_report_text(report.handle),
               stdout);
    if (!output.empty() && !write_text_file(output, ftirqc_report_json(report.handle))) {
        std::fprintf(stderr, "error: Io: cannot write '%s'\n", output.c_str());
        return kExitParseError;
    }
    if (!plot_path.empty()) {
        status = emit_plot(report, plot_path);
        if (status != FTIRQC_OK) return report_failure(status);
    }
    return kExitOk;
}

int run_qc(const std::string& input, const CommonFlags& flags, bool json_stdout,
           const std::string& output, const std::string& plot_path) {
    Options options;
    ftirqc_status status = build_options(flags, options);
    if (status != FTIRQC_OK) return report_failure(status);

    Spectrum spectrum;
    status = load_spectrum(input, flags, spectrum);
    if (status != FTIRQC_OK) return report_failure(status);

    Report report;
    status = ftirqc_qc(spectrum.handle, options.handle, &report.handle);
    if (status != FTIRQC_OK) return report_failure(status);

    std::fputs(json_stdout ? ftirqc_report_json(report.handle)
                           : ftirqc_report_text(report.handle),
               stdout);
    if (!output.empty() && !write_text_file(output, ftirqc_report_json(report.handle))) {
        std::fprintf(stderr, "error: Io: cannot write '%s'\n", output.c_str());
        return kExitParseError;
    }
    if (!plot_path.empty()) {
        status = emit_plot(report, plot_path);
        if (status != FTIRQC_OK) return report_failure(status);
    }
    return ftirqc_report_separation_complete(report.handle) == 1 ? kExitOk : kExitIncomplete;
}

int run_batch(const std::string& directory, const CommonFlags& flags,
              const std::string& output_dir) {
    if (!fs::is_directory(directory)) {
        std::fprintf(stderr, "error: Io: '%s' is not a directory\n", directory.c_str());
        return kExitParseError;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(directory))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::fprintf(stderr, "error: Io: directory '%s' has no files\n", directory.c_str());
        return kExitParseError;
    }

    Options options;
    ftirqc_status status = build_options(flags, options);
    if (status != FTIRQC_OK) return report_failure(status);
    // Batch reports always carry the separation verdict column.
    status = ftirqc_options_set(options.handle, "aqueous", "true");
    if (status != FTIRQC_OK) return report_failure(status);

    if (!output_dir.empty()) fs::create_directories(output_dir);

    std::printf("%-24s %-9s %-9s %-7s %-5s %-12s %s\n", "id", "a_factor", "c_factor", "vr",
                "type", "maturity", "verdict");
    std::size_t succeeded = 0;
    for (const fs::path& file : files) {
        Spectrum spectrum;
        status = load_spectrum(file.string(), flags, spectrum);
        Report report;
        if (status == FTIRQC_OK)
            status = ftirqc_analyze(spectrum.handle, options.handle, &report.handle);
        if (status != FTIRQC_OK) {
            std::printf("%-24s ERROR %s: %s\n", file.filename().string().c_str(),
                        ftirqc_status_name(status), ftirqc_last_error());
            continue;
        }
        ++succeeded;
        double a = 0, c = 0, vr = 0;
        ftirqc_report_value(report.handle, "a_factor", &a);
        ftirqc_report_value(report.handle, "c_factor", &c);
        ftirqc_report_value(report.handle, "vr_percent", &vr);
        const char* type = ftirqc_report_string(report.handle, "kerogen_type");
        const char* maturity = ftirqc_report_string(report.handle, "maturity_level");
        const char* verdict = ftirqc_report_string(report.handle, "separation_status");
        std::printf("%-24s %-9.4f %-9.4f %-7.3f %-5s %-12s %s\n",
                    ftirqc_report_string(report.handle, "spectrum_id"), a, c, vr,
                    type ? type : "-", maturity ? maturity : "-", verdict ? verdict : "-");
        if (!output_dir.empty()) {
            const fs::path out = fs::path(output_dir) / (file.filename().string() + ".report.json");
            if (!write_text_file(out, ftirqc_report_json(report.handle))) {
                std::fprintf(stderr, "error: Io: cannot write '%s'\n", out.string().c_str());
                return kExitParseError;
            }
        }
    }
    return succeeded > 0 ? kExitOk : kExitParseError;
}

int run_convert(const std::string& input, const CommonFlags& flags, const std::string& to,
                bool to_absorbance_flag, const std::string& output) {
    Spectrum spectrum;
    ftirqc_status status = load_spectrum(input, flags, spectrum);
    if (status != FTIRQC_OK) return report_failure(status);

    Spectrum converted;
    const ftirqc_spectrum* source = spectrum.handle;
    if (to_absorbance_flag) {
        status = ftirqc_spectrum_to_absorbance(spectrum.handle, &converted.handle);
        if (status != FTIRQC_OK) return report_failure(status);
        source = converted.handle;
    }

    if (output.empty()) {
        OwnedString text;
        status = to == "jcamp" ? ftirqc_spectrum_write_jcamp(source, &text.value)
                               : ftirqc_spectrum_write_csv(source, &text.value);
        if (status != FTIRQC_OK) return report_failure(status);
        std::fputs(text.value, stdout);
        return kExitOk;
    }
    status = ftirqc_spectrum_write_file(source, output.c_str(), to.c_str());
    if (status != FTIRQC_OK) return report_failure(status);
    return kExitOk;
}

int run_proximate(const CompositionFlags& comp, bool json_stdout, const std::string& output) {
    OwnedString json, text;
    int closure_ok = 0;
    ftirqc_status status;
    if (!comp.file.empty()) {
        status = ftirqc_proximate_report_file(comp.file.c_str(), comp.tol, &json.value,
                                              &text.value, &closure_ok);
    } else {
        double values[5], unc[5];
        comp.values(values, unc);
        status =
            ftirqc_proximate_report(values, unc, comp.tol, &json.value, &text.value, &closure_ok);
    }
    if (status != FTIRQC_OK) return report_failure(status);
    std::fputs(json_stdout ? json.value : text.value, stdout);
    if (!closure_ok) std::fprintf(stderr, "warning: closure violated (tol %g)\n", comp.tol);
    if (!output.empty() && !write_text_file(output, json.value)) {
        std::fprintf(stderr, "error: Io: cannot write '%s'\n", output.c_str());
        return kExitParseError;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"FTIR characterization of HTL biocrude and aqueous-phase samples"};
    app.set_version_flag("--version", std::string(ftirqc_version()));
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Full maturity / kerogen analysis of a spectrum");
    std::string analyze_input, analyze_output, analyze_plot;
    bool analyze_json = false, analyze_aqueous = false;
    CommonFlags analyze_flags;
    CompositionFlags analyze_comp;
    analyze->add_option("input", analyze_input, "Spectrum file (CSV or JCAMP-DX)")->required();
    analyze->add_option("--output", analyze_output, "Write the JSON report to this path");
    analyze->add_flag("--json", analyze_json, "Print JSON instead of text on stdout");
    analyze->add_flag("--aqueous", analyze_aqueous, "Also run the separation verdict");
    analyze->add_option("--emit-plot", analyze_plot,
                        "Write the baseline-corrected spectrum as CSV for plotting");
    add_common_flags(analyze, analyze_flags);
    add_composition_flags(analyze, analyze_comp);

    // qc
    auto* qc = app.add_subcommand("qc", "Separation-completeness check of an aqueous-phase spectrum");
    std::string qc_input, qc_output, qc_plot;
    bool qc_json = false;
    CommonFlags qc_flags;
    qc->add_option("input", qc_input, "Aqueous-phase spectrum file")->required();
    qc->add_option("--output", qc_output, "Write the JSON report to this path");
    qc->add_flag("--json", qc_json, "Print JSON instead of text on stdout");
    qc->add_option("--emit-plot", qc_plot,
                   "Write the baseline-corrected spectrum as CSV for plotting");
    add_common_flags(qc, qc_flags);

    // batch
    auto* batch = app.add_subcommand("batch", "Analyze every file in a directory");
    std::string batch_dir, batch_output;
    CommonFlags batch_flags;
    batch->add_option("directory", batch_dir, "Directory of spectrum files")->required();
    batch->add_option("--output", batch_output, "Directory for per-file JSON reports");
    add_common_flags(batch, batch_flags);

    // convert
    auto* convert = app.add_subcommand("convert", "Convert between CSV and JCAMP-DX");
    std::string convert_input, convert_output, convert_to = "csv";
    bool convert_absorbance = false;
    CommonFlags convert_flags;
    convert->add_option("input", convert_input, "Spectrum file")->required();
    convert->add_option("--to", convert_to, "Target format: csv or jcamp")
        ->required()
        ->check(CLI::IsMember({"csv", "jcamp"}));
    convert->add_option("--output", convert_output, "Output path (stdout if omitted)");
    convert->add_flag("--to-absorbance", convert_absorbance,
                      "Convert transmittance to absorbance first");
    add_common_flags(convert, convert_flags);

    // proximate
    auto* proximate = app.add_subcommand("proximate", "Proximate-analysis closure check");
    std::string proximate_output;
    bool proximate_json = false;
    CompositionFlags proximate_comp;
    proximate->add_option("--output", proximate_output, "Write the JSON report to this path");
    proximate->add_flag("--json", proximate_json, "Print JSON instead of text on stdout");
    add_composition_flags(proximate, proximate_comp);

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed())
        return run_analyze(analyze_input, analyze_flags, analyze_comp, analyze_aqueous,
                           analyze_json, analyze_output, analyze_plot);
    if (qc->parsed()) return run_qc(qc_input, qc_flags, qc_json, qc_output, qc_plot);
    if (batch->parsed()) return run_batch(batch_dir, batch_flags, batch_output);
    if (convert->parsed())
        return run_convert(convert_input, convert_flags, convert_to, convert_absorbance,
                           convert_output);
    if (proximate->parsed()) return run_proximate(proximate_comp, proximate_json, proximate_output);
    return kExitOk;
}
