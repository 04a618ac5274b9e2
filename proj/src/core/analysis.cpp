#include "core/analysis.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/version.hpp"

namespace ftirqc {

namespace {

using nlohmann::json;

Spectrum run_preprocess(const Spectrum& raw, const AnalysisOptions& options) {
    validate(options.preprocess);
    validate(options.grid);
    Spectrum s = to_absorbance(raw);
    s = resample_uniform(s, options.preprocess.grid_step);
    if (options.preprocess.smooth_enabled) s = smooth(s, options.preprocess);
    return baseline_correct(s, options.preprocess.baseline_method);
}

std::vector<ReportPeak> collect_peaks(const Spectrum& corrected, const AnalysisOptions& options) {
    const double global_max = *std::max_element(corrected.y.begin(), corrected.y.end());
    const double min_prominence = options.peak_min_prominence_rel * std::max(global_max, 0.0);
    std::vector<ReportPeak> out;
    for (const Peak& peak : detect_peaks(corrected, min_prominence)) {
        ReportPeak rp{peak, {}};
        for (const auto& [p, band] : assign_bands({peak}, options.bands))
            rp.band_labels.push_back(band.label);
        out.push_back(std::move(rp));
    }
    return out;
}

AnalysisReport make_base_report(const Spectrum& raw, const AnalysisOptions& options,
                                const char* mode) {
    AnalysisReport report;
    report.mode = mode;
    report.spectrum_id = raw.id;
    if (auto it = raw.metadata.find("source"); it != raw.metadata.end()) report.source = it->second;
    report.input_y_unit = raw.y_unit;
    report.input_points = raw.size();
    report.options = options;
    report.processed = run_preprocess(raw, options);
    report.peaks = collect_peaks(report.processed, options);
    if (options.composition)
        report.closure_violations =
            validate_composition(*options.composition, options.composition_tol);
    return report;
}

} // namespace

AnalysisReport analyze_spectrum(const Spectrum& raw, const AnalysisOptions& options) {
    AnalysisReport report = make_base_report(raw, options, "analyze");
    report.factors = compute_factors(report.processed, options.half_width);
    report.maturity = classify(report.factors->a_factor, report.factors->c_factor, options.grid);
    if (options.aqueous)
        report.verdict = separation_verdict(report.processed, options.qc_threshold);
    return report;
}

AnalysisReport qc_spectrum(const Spectrum& raw, const AnalysisOptions& options) {
    AnalysisReport report = make_base_report(raw, options, "qc");
    report.verdict = separation_verdict(report.processed, options.qc_threshold);
    return report;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json peak_json(const Peak& p) {
    return {{"position", p.position}, {"height", p.height}, {"prominence", p.prominence}};
}

json band_json(const BandDefinition& b) {
    return {{"label", b.label}, {"lo", b.lo}, {"hi", b.hi}, {"group", b.group},
            {"vibration", b.vibration}};
}

json verdict_json(const SeparationVerdict& v) {
    json offending = json::array();
    for (const OffendingBand& ob : v.offending_bands)
        offending.push_back({{"band", band_json(ob.band)}, {"peak", peak_json(ob.peak)}});
    return {{"status", v.status == SeparationStatus::Complete ? "Complete" : "Incomplete"},
            {"threshold_used", v.threshold_used},
            {"global_max", v.global_max},
            {"offending_bands", offending}};
}

json composition_json(const ProximateComposition& p,
                      const std::vector<ClosureViolation>& violations, double tol) {
    json j = {{"mc", p.mc}, {"ts", p.ts}, {"vs", p.vs}, {"ac", p.ac}, {"fc", p.fc},
              {"uncertainties",
               {{"mc", p.u_mc}, {"ts", p.u_ts}, {"vs", p.u_vs}, {"ac", p.u_ac}, {"fc", p.u_fc}}},
              {"closure_tol", tol},
              {"closure_ok", violations.empty()}};
    json v = json::array();
    for (const ClosureViolation& cv : violations)
        v.push_back({{"identity", cv.identity}, {"expected", cv.expected}, {"actual", cv.actual},
                     {"deviation", cv.deviation}});
    j["closure_violations"] = v;
    return j;
}

json options_json(const AnalysisOptions& o) {
    json bands = json::array();
    for (const BandDefinition& b : o.bands) bands.push_back(band_json(b));
    json vr_map = json::array();
    for (const VrKnot& k : o.grid.vr_map) vr_map.push_back({k.c, k.vr});
    return {
        {"preprocess",
         {{"grid_step", o.preprocess.grid_step},
          {"smooth", o.preprocess.smooth_enabled},
          {"smooth_window", o.preprocess.smooth_window},
          {"smooth_poly_order", o.preprocess.smooth_poly_order},
          {"baseline_method", baseline_method_name(o.preprocess.baseline_method)},
          {"source", o.preprocess_source}}},
        {"grid",
         {{"kerogen_a_breaks", o.grid.kerogen_a_breaks},
          {"vr_map", vr_map},
          {"maturity_breaks", o.grid.maturity_breaks},
          {"source", o.grid_source}}},
        {"bands", {{"rows", bands}, {"source", o.band_source}}},
        {"half_width", o.half_width},
        {"qc_threshold", o.qc_threshold},
        {"peak_min_prominence_rel", o.peak_min_prominence_rel},
    };
}

} // namespace

std::string report_json(const AnalysisReport& report) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["mode"] = report.mode;
    j["spectrum"] = {{"id", report.spectrum_id},
                     {"source", report.source},
                     {"input_y_unit", y_unit_name(report.input_y_unit)},
                     {"input_points", report.input_points},
                     {"x_min", report.processed.x_min()},
                     {"x_max", report.processed.x_max()},
                     {"points", report.processed.size()}};
    j["config"] = options_json(report.options);

    json peaks = json::array();
    for (const ReportPeak& rp : report.peaks) {
        json p = peak_json(rp.peak);
        p["bands"] = rp.band_labels;
        peaks.push_back(p);
    }
    j["peaks"] = peaks;

    if (report.factors) {
        const FactorResult& f = *report.factors;
        j["factors"] = {{"h2930", f.h2930}, {"h2860", f.h2860}, {"h1705", f.h1705},
                        {"h1630", f.h1630}, {"a_factor", f.a_factor}, {"c_factor", f.c_factor}};
    }
    if (report.maturity) {
        const MaturityResult& m = *report.maturity;
        j["classification"] = {{"kerogen_type", kerogen_type_name(m.kerogen_type)},
                               {"vr_percent", m.vr_percent},
                               {"maturity_level", maturity_level_name(m.maturity_level)},
                               {"oil_intensity", m.oil_intensity}};
    }
    if (report.verdict) j["separation"] = verdict_json(*report.verdict);
    if (report.options.composition)
        j["proximate"] = composition_json(*report.options.composition, report.closure_violations,
                                          report.options.composition_tol);
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Text

namespace {

std::string num(double v, int decimals = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

void row(std::string& out, const std::string& name, const std::string& value) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-30s %s\n", name.c_str(), value.c_str());
    out += buf;
}

} // namespace

std::string report_text(const AnalysisReport& report) {
    std::string out;
    out += std::string(kToolName) + " " + kToolVersion + " " + report.mode + " report\n";
    out += "spectrum: " + (report.spectrum_id.empty() ? "(unnamed)" : report.spectrum_id);
    if (!report.source.empty()) out += "  [" + report.source + "]";
    out += "\n";
    out += "  " + std::to_string(report.input_points) + " points in, unit " +
           y_unit_name(report.input_y_unit) + "; processed to " +
           std::to_string(report.processed.size()) + " points on [" +
           num(report.processed.x_min(), 1) + ", " + num(report.processed.x_max(), 1) +
           "] cm-1\n";
    const PreprocessConfig& pp = report.options.preprocess;
    out += "  preprocess: grid_step=" + num(pp.grid_step, 3) +
           ", baseline=" + baseline_method_name(pp.baseline_method) +
           ", smooth=" + (pp.smooth_enabled ? "on" : "off");
    if (pp.smooth_enabled)
        out += " (window " + std::to_string(pp.smooth_window) + ", order " +
               std::to_string(pp.smooth_poly_order) + ")";
    out += "\n";

    if (report.factors) {
        const FactorResult& f = *report.factors;
        out += "\nDiagnostic band heights (baseline-corrected absorbance, +-" +
               num(report.options.half_width, 1) + " cm-1 windows)\n";
        row(out, "2930 cm-1 (aliphatic)", num(f.h2930));
        row(out, "2860 cm-1 (aliphatic)", num(f.h2860));
        row(out, "1705 cm-1 (carbonyl)", num(f.h1705));
        row(out, "1630 cm-1 (aromatic)", num(f.h1630));
    }
    if (report.maturity) {
        const MaturityResult& m = *report.maturity;
        out += "\nMaturity and oil intensity\n";
        row(out, "A-Factor", num(report.factors->a_factor, 2));
        row(out, "C-Factor", num(report.factors->c_factor, 2));
        row(out, "Vitrinite Reflectance (VR%)", num(m.vr_percent, 2));
        row(out, "Maturity Level", maturity_level_name(m.maturity_level));
        row(out, "Kerogen Type", std::string("Type-") + kerogen_type_name(m.kerogen_type));
        row(out, "Oil Intensity", m.oil_intensity);
    }
    if (report.verdict) {
        const SeparationVerdict& v = *report.verdict;
        out += "\nSeparation QC (aqueous phase)\n";
        row(out, "status",
            v.status == SeparationStatus::Complete ? "Complete" : "Incomplete");
        row(out, "threshold",
            num(v.threshold_used, 3) + " x global max (" + num(v.global_max) + ")");
        if (v.offending_bands.empty()) {
            row(out, "offending bands", "none");
        } else {
            for (const OffendingBand& ob : v.offending_bands)
                row(out, "offending band",
                    ob.band.label + " [" + num(ob.band.lo, 0) + "-" + num(ob.band.hi, 0) +
                        "]: height " + num(ob.peak.height) + " at " + num(ob.peak.position, 1));
        }
    }

    if (!report.peaks.empty()) {
        out += "\nDetected peaks (prominence >= " + num(report.options.peak_min_prominence_rel, 3) +
               " x global max)\n";
        out += "  position   height     prominence  bands\n";
        for (const ReportPeak& rp : report.peaks) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "  %-10.1f %-10.4f %-11.4f ", rp.peak.position,
                          rp.peak.height, rp.peak.prominence);
            out += buf;
            for (std::size_t i = 0; i < rp.band_labels.size(); ++i)
                out += (i ? "; " : "") + rp.band_labels[i];
            out += "\n";
        }
    }

    if (report.options.composition)
        out += "\n" + proximate_text(*report.options.composition, report.closure_violations,
                                     report.options.composition_tol);

    out += "\nclassification grid: " + report.options.grid_source + "; bands: " +
           report.options.band_source + "\n";
    return out;
}

std::string proximate_json(const ProximateComposition& p,
                           const std::vector<ClosureViolation>& violations, double tol) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["proximate"] = composition_json(p, violations, tol);
    return j.dump(2) + "\n";
}

std::string proximate_text(const ProximateComposition& p,
                           const std::vector<ClosureViolation>& violations, double tol) {
    std::string out = "Proximate composition (mass %, wet sample)\n";
    auto entry = [&](const char* name, double v, double u) {
        row(out, name, num(v, 1) + (u > 0.0 ? " +- " + num(u, 1) : ""));
    };
    entry("Moisture Content (MC)", p.mc, p.u_mc);
    entry("Total Solids (TS)", p.ts, p.u_ts);
    entry("Volatile Solids (VS)", p.vs, p.u_vs);
    entry("Ash Content (AC)", p.ac, p.u_ac);
    entry("Fixed Carbon (FC)", p.fc, p.u_fc);
    if (violations.empty()) {
        row(out, "closure", "ok (tol " + num(tol, 2) + ")");
    } else {
        for (const ClosureViolation& v : violations)
            row(out, "closure violation",
                v.identity + ": expected " + num(v.expected, 2) + ", got " + num(v.actual, 2));
    }
    return out;
}

} // namespace ftirqc
