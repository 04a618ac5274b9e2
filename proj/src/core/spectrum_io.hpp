#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "core/spectrum.hpp"

namespace ftirqc {

enum class FileFormat { Csv, Jcamp };

/// Parse a two-column CSV spectrum.
///
/// Accepted layout, in order:
///   - optional "# key: value" comment lines (stored as metadata; "id" maps
///     to Spectrum::id)
///   - optional single header row ("wavenumber_cm-1,<unit token>")
///   - one "wavenumber,intensity" row per point, comma- or
///     whitespace-delimited
///
/// Rows may come in any wavenumber order (instruments commonly emit
/// descending); the result is sorted ascending. Duplicate wavenumbers are
/// rejected.
///
/// The y unit is resolved as: explicit unit_override, else a recognized
/// header token, else percent transmittance (the common instrument export).
Spectrum parse_csv(std::string_view text, std::optional<YUnit> unit_override = std::nullopt);

/// Serialize as CSV: "# key: value" metadata comments, a
/// "wavenumber_cm-1,<unit>" header, then one row per point. Numbers carry
/// 15 significant digits so parse(write(s)) stays within 1e-9 everywhere.
std::string write_csv(const Spectrum& s);

/// Parse the JCAMP-DX labeled-data-record subset:
/// ##TITLE, ##XUNITS (1/CM only), ##YUNITS (TRANSMITTANCE or ABSORBANCE),
/// ##FIRSTX, ##LASTX, ##NPOINTS, ##XFACTOR, ##YFACTOR and
/// ##XYDATA=(X++(Y..Y)) with space-separated AFFN numerals. SQZ/DIF/DUP
/// compression is rejected. The x axis is reconstructed from
/// FIRSTX/LASTX/NPOINTS; y values are scaled by YFACTOR.
///
/// YUNITS=TRANSMITTANCE is read as fractional transmittance; pass
/// unit_override to force a different interpretation.
Spectrum parse_jcamp(std::string_view text, std::optional<YUnit> unit_override = std::nullopt);

/// Serialize as the JCAMP-DX subset understood by parse_jcamp. Percent
/// transmittance is written as fractional TRANSMITTANCE (values / 100),
/// since the subset has no percent unit.
std::string write_jcamp(const Spectrum& s);

/// JCAMP if the first non-blank line starts with "##", CSV otherwise.
FileFormat sniff_format(std::string_view text);

/// Reads and parses a spectrum file. If format is not given it is sniffed.
/// An empty Spectrum::id is filled with the file stem.
Spectrum read_spectrum_file(const std::filesystem::path& path,
                            std::optional<FileFormat> format = std::nullopt,
                            std::optional<YUnit> unit_override = std::nullopt);

void write_spectrum_file(const Spectrum& s, const std::filesystem::path& path, FileFormat format);

/// Whole-file read with Io errors; shared by config loaders.
std::string read_text_file(const std::filesystem::path& path);

} // namespace ftirqc
