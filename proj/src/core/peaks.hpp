#pragma once

#include <string>
#include <vector>

#include "core/spectrum.hpp"

namespace ftirqc {

/// A located maximum. height is the (baseline-corrected) absorbance at the
/// maximum; prominence is height above the higher of the two flanking
/// valley minima. Invariants: height >= 0 and 0 <= prominence <= height.
struct Peak {
    double position = 0.0;
    double height = 0.0;
    double prominence = 0.0;
};

/// A wavenumber interval with its chemical interpretation.
struct BandDefinition {
    std::string label;
    double lo = 0.0;
    double hi = 0.0;
    std::string group;
    std::string vibration;

    bool contains(double position) const noexcept { return position >= lo && position <= hi; }
};

enum class SeparationStatus { Complete, Incomplete };

struct OffendingBand {
    BandDefinition band;
    Peak peak;
};

/// Outcome of the aqueous-phase separation check. Complete iff no aliphatic
/// window rises above threshold_used * global_max.
struct SeparationVerdict {
    SeparationStatus status = SeparationStatus::Complete;
    std::vector<OffendingBand> offending_bands;
    double threshold_used = 0.0;
    double global_max = 0.0;
};

inline constexpr double kDefaultHalfWidth = 10.0;
inline constexpr double kDefaultQcThreshold = 0.05;

// The two carbon-chain windows the separation check looks at.
inline constexpr double kAliphaticStretchLo = 2800.0;
inline constexpr double kAliphaticStretchHi = 3000.0;
inline constexpr double kAliphaticBendLo = 1350.0;
inline constexpr double kAliphaticBendHi = 1460.0;

/// Maximum y inside [center - half_width, center + half_width], reported
/// with its position and a prominence against the window minima on each
/// side of the maximum. Negative maxima (possible after linear-endpoint
/// correction) are reported as zero height. Throws WindowOutOfRange if the
/// spectrum does not cover the window.
Peak band_height(const Spectrum& s, double center, double half_width = kDefaultHalfWidth);

/// All strict local maxima with topographic prominence >= min_prominence,
/// sorted by position. The prominence of a maximum is its height minus the
/// higher of the two valley minima found scanning outward to the nearest
/// strictly higher sample or the spectrum edge.
std::vector<Peak> detect_peaks(const Spectrum& s, double min_prominence);

/// Pairs each peak with every band whose interval contains its position.
/// Peaks that fall in no band are omitted; a peak inside overlapping bands
/// appears once per band.
std::vector<std::pair<Peak, BandDefinition>> assign_bands(const std::vector<Peak>& peaks,
                                                          const std::vector<BandDefinition>& table);

/// Band assignments for HTL biocrude / aqueous-phase FTIR work.
const std::vector<BandDefinition>& default_band_table();

/// Checks an aqueous-phase spectrum for leftover carbon-chain signal:
/// Incomplete iff the band height in either aliphatic window (2800-3000 or
/// 1350-1460 cm^-1) exceeds rel_threshold times the global maximum
/// absorbance. The threshold is relative, so the verdict is scale-free.
SeparationVerdict separation_verdict(const Spectrum& aqueous,
                                     double rel_threshold = kDefaultQcThreshold);

} // namespace ftirqc
