#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/classify.hpp"
#include "core/peaks.hpp"
#include "core/preprocess.hpp"
#include "core/proximate.hpp"
#include "core/spectrum.hpp"

namespace ftirqc {

/// Everything a run needs; the report echoes all of it so a run can be
/// reproduced from its own output.
struct AnalysisOptions {
    PreprocessConfig preprocess;
    ClassificationGrid grid;
    std::vector<BandDefinition> bands = default_band_table();
    double half_width = kDefaultHalfWidth;
    double qc_threshold = kDefaultQcThreshold;
    /// detect_peaks threshold as a fraction of the global maximum.
    double peak_min_prominence_rel = 0.02;
    /// Include the separation verdict in analyze mode (qc mode always has it).
    bool aqueous = false;
    std::optional<ProximateComposition> composition;
    double composition_tol = kDefaultClosureTol;
    // Provenance strings echoed into reports.
    std::string preprocess_source = "built-in defaults";
    std::string grid_source = "built-in defaults (single-anchor calibration)";
    std::string band_source = "built-in defaults";
};

struct ReportPeak {
    Peak peak;
    std::vector<std::string> band_labels;
};

struct AnalysisReport {
    std::string mode; // "analyze" or "qc"
    std::string spectrum_id;
    std::string source;
    YUnit input_y_unit = YUnit::TransmittancePercent;
    std::size_t input_points = 0;
    AnalysisOptions options;
    Spectrum processed; // resampled, optionally smoothed, baseline-corrected
    std::vector<ReportPeak> peaks;
    std::optional<FactorResult> factors;
    std::optional<MaturityResult> maturity;
    std::optional<SeparationVerdict> verdict;
    std::vector<ClosureViolation> closure_violations;
};

/// Full pipeline: to_absorbance -> resample -> [smooth] -> baseline ->
/// factors -> classify -> peak detection and band assignment. Adds the
/// separation verdict when options.aqueous is set.
AnalysisReport analyze_spectrum(const Spectrum& raw, const AnalysisOptions& options);

/// Separation QC only: same preprocessing, then the verdict. No factors.
AnalysisReport qc_spectrum(const Spectrum& raw, const AnalysisOptions& options);

/// Machine-readable document with a stable, versioned schema. Deterministic:
/// identical input and options give byte-identical output (no timestamps).
std::string report_json(const AnalysisReport& report);

/// Human-readable report, aligned-text table per sample.
std::string report_text(const AnalysisReport& report);

/// Stand-alone proximate report (no spectrum involved).
std::string proximate_json(const ProximateComposition& p,
                           const std::vector<ClosureViolation>& violations, double tol);
std::string proximate_text(const ProximateComposition& p,
                           const std::vector<ClosureViolation>& violations, double tol);

} // namespace ftirqc
