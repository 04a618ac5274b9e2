#include "core/spectrum_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "core/errors.hpp"

namespace ftirqc {

namespace {

// 15 significant digits keeps round-trips within 1e-9 absolute across the
// whole wavenumber/absorbance range while still printing short decimals
// ("0.1", not "0.100000000000000006").
std::string format_sig(double v, int digits = 15) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::string to_lower(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    for (char c : in) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<double> parse_double(std::string_view token) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1); // AFFN allows a leading +
    if (token.empty()) return std::nullopt;
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

std::vector<std::string_view> split_any(std::string_view line, std::string_view delims) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start < line.size()) {
        std::size_t end = line.find_first_of(delims, start);
        if (end == std::string_view::npos) end = line.size();
        if (end > start) out.push_back(line.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

struct Line {
    std::string_view text;
    std::size_t number; // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
    // Tolerates \n and \r\n endings; strips a UTF-8 BOM.
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
    std::vector<Line> lines;
    std::size_t start = 0, number = 1;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({line, number++});
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

void sort_points_ascending(Spectrum& s) {
    const std::size_t n = s.x.size();
    bool sorted = true;
    for (std::size_t i = 1; i < n && sorted; ++i) sorted = s.x[i - 1] < s.x[i];
    if (sorted) return;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return s.x[a] < s.x[b]; });
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = s.x[order[i]];
        ys[i] = s.y[order[i]];
    }
    s.x = std::move(xs);
    s.y = std::move(ys);
}

} // namespace

// ---------------------------------------------------------------------------
// CSV

Spectrum parse_csv(std::string_view text, std::optional<YUnit> unit_override) {
    Spectrum s;
    std::optional<YUnit> header_unit;
    bool seen_header = false;
    bool seen_data = false;

    for (const Line& line : split_lines(text)) {
        std::string_view body = trim(line.text);
        if (body.empty()) continue;
        if (body.front() == '#') {
            // "# key: value" comments carry metadata; anything else is noise.
            std::string_view rest = trim(body.substr(1));
            std::size_t colon = rest.find(':');
            if (colon != std::string_view::npos) {
                std::string key(trim(rest.substr(0, colon)));
                std::string value(trim(rest.substr(colon + 1)));
                if (!key.empty()) {
                    if (key == "id")
                        s.id = value;
                    else
                        s.metadata[key] = value;
                }
            }
            continue;
        }

        auto fields = split_any(body, ", \t");
        // A row whose first field is not a number is a header candidate;
        // anything else must parse as a data row.
        if (!fields.empty() && !parse_double(fields[0])) {
            if (seen_data || seen_header)
                raise(ErrorCode::MalformedRow,
                      "line " + std::to_string(line.number) + ": expected two numeric columns");
            seen_header = true;
            if (fields.size() >= 2) header_unit = y_unit_from_token(fields[1]);
            continue;
        }

        std::vector<double> values;
        values.reserve(fields.size());
        for (auto f : fields) {
            auto v = parse_double(f);
            if (!v)
                raise(ErrorCode::MalformedRow,
                      "line " + std::to_string(line.number) + ": non-numeric field '" +
                          std::string(f) + "'");
            values.push_back(*v);
        }

        if (values.size() != 2)
            raise(ErrorCode::MalformedRow,
                  "line " + std::to_string(line.number) + ": expected 2 columns, got " +
                      std::to_string(values.size()));
        if (!std::isfinite(values[0]) || !std::isfinite(values[1]))
            raise(ErrorCode::NonFiniteValue, "line " + std::to_string(line.number));
        seen_data = true;
        s.x.push_back(values[0]);
        s.y.push_back(values[1]);
    }

    s.y_unit = unit_override ? *unit_override
                             : header_unit.value_or(YUnit::TransmittancePercent);
    sort_points_ascending(s);
    validate(s);
    return s;
}

std::string write_csv(const Spectrum& s) {
    std::string out;
    if (!s.id.empty()) out += "# id: " + s.id + "\n";
    for (const auto& [key, value] : s.metadata) out += "# " + key + ": " + value + "\n";
    out += "wavenumber_cm-1,";
    out += y_unit_name(s.y_unit);
    out += "\n";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += format_sig(s.x[i]) + "," + format_sig(s.y[i]) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// JCAMP-DX subset

namespace {

// JCAMP label normalization: case, spaces, dashes, underscores and slashes
// are not significant.
std::string normalize_label(std::string_view label) {
    std::string out;
    for (char c : label) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalnum(u)) out.push_back(static_cast<char>(std::toupper(u)));
    }
    return out;
}

std::string_view strip_inline_comment(std::string_view line) {
    std::size_t pos = line.find("$$");
    return pos == std::string_view::npos ? line : line.substr(0, pos);
}

double record_number(const std::map<std::string, std::string>& records, const std::string& key) {
    auto v = parse_double(records.at(key));
    if (!v) raise(ErrorCode::UnsupportedEncoding, "##" + key + " is not a plain AFFN numeral");
    return *v;
}

bool affn_token(std::string_view token) {
    for (char c : token) {
        switch (c) {
            case '0': case '1': case '2': case '3': case '4':
            case '5': case '6': case '7': case '8': case '9':
            case '+': case '-': case '.': case 'e': case 'E':
                break;
            default:
                return false; // SQZ/DIF/DUP digits, '?', anything else
        }
    }
    // An exponent marker with no leading digit is an SQZ digit, not AFFN.
    return !token.empty() && token.front() != 'e' && token.front() != 'E';
}

} // namespace

Spectrum parse_jcamp(std::string_view text, std::optional<YUnit> unit_override) {
    std::map<std::string, std::string> records;
    std::vector<std::string_view> data_lines;
    bool in_data = false;

    for (const Line& line : split_lines(text)) {
        std::string_view body = trim(strip_inline_comment(line.text));
        if (body.empty()) continue;
        if (body.rfind("##", 0) == 0) {
            std::size_t eq = body.find('=');
            std::string label = normalize_label(body.substr(2, eq == std::string_view::npos
                                                                   ? std::string_view::npos
                                                                   : eq - 2));
            std::string value(eq == std::string_view::npos ? std::string_view{}
                                                           : trim(body.substr(eq + 1)));
            if (label == "END") break;
            records[label] = value;
            in_data = label == "XYDATA";
            continue;
        }
        if (in_data) data_lines.push_back(body);
    }

    for (const char* required : {"TITLE", "XUNITS", "YUNITS", "FIRSTX", "LASTX", "NPOINTS",
                                 "XFACTOR", "YFACTOR", "XYDATA"})
        if (!records.count(required))
            raise(ErrorCode::MissingRecord, std::string("##") + required + " is required");

    std::string xunits = normalize_label(records.at("XUNITS"));
    if (xunits != "1CM")
        raise(ErrorCode::UnsupportedXUnits, "##XUNITS must be 1/CM, got '" + records.at("XUNITS") + "'");

    std::string form = records.at("XYDATA");
    form.erase(std::remove_if(form.begin(), form.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               form.end());
    if (form != "(X++(Y..Y))")
        raise(ErrorCode::UnsupportedEncoding, "##XYDATA form '" + records.at("XYDATA") +
                                                  "' is not supported, expected (X++(Y..Y))");

    YUnit file_unit;
    std::string yunits = normalize_label(records.at("YUNITS"));
    if (yunits == "TRANSMITTANCE")
        file_unit = YUnit::TransmittanceFraction;
    else if (yunits == "ABSORBANCE")
        file_unit = YUnit::Absorbance;
    else
        raise(ErrorCode::UnsupportedEncoding,
              "##YUNITS must be TRANSMITTANCE or ABSORBANCE, got '" + records.at("YUNITS") + "'");

    const double first_x = record_number(records, "FIRSTX");
    const double last_x = record_number(records, "LASTX");
    const double y_factor = record_number(records, "YFACTOR");
    const double npoints_raw = record_number(records, "NPOINTS");
    record_number(records, "XFACTOR"); // required by the subset; x comes from FIRSTX/LASTX
    if (npoints_raw < 2 || npoints_raw != std::floor(npoints_raw))
        raise(ErrorCode::PointCountMismatch,
              "##NPOINTS must be an integer >= 2, got " + records.at("NPOINTS"));
    const std::size_t npoints = static_cast<std::size_t>(npoints_raw);

    std::vector<double> ys;
    ys.reserve(npoints);
    for (std::string_view line : data_lines) {
        auto tokens = split_any(line, " \t");
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (!affn_token(tokens[i]))
                raise(ErrorCode::UnsupportedEncoding,
                      "compressed or non-AFFN token '" + std::string(tokens[i]) +
                          "' (SQZ/DIF/DUP forms are not supported)");
            if (i == 0) continue; // leading token is the line's x checkpoint
            auto v = parse_double(tokens[i]);
            if (!v)
                raise(ErrorCode::UnsupportedEncoding,
                      "cannot parse y value '" + std::string(tokens[i]) + "'");
            ys.push_back(*v * y_factor);
        }
    }

    if (ys.size() != npoints)
        raise(ErrorCode::PointCountMismatch, "##NPOINTS=" + std::to_string(npoints) + " but " +
                                                 std::to_string(ys.size()) + " y values found");

    Spectrum s;
    s.id = records.at("TITLE");
    s.y_unit = unit_override.value_or(file_unit);
    const double dx = (last_x - first_x) / static_cast<double>(npoints - 1);
    s.x.resize(npoints);
    for (std::size_t i = 0; i < npoints; ++i)
        s.x[i] = first_x + dx * static_cast<double>(i);
    s.x.back() = last_x; // keep the declared endpoint exact
    s.y = std::move(ys);
    if (first_x > last_x) {
        std::reverse(s.x.begin(), s.x.end());
        std::reverse(s.y.begin(), s.y.end());
    }

    // Preserve records outside the subset as metadata.
    for (const auto& [label, value] : records) {
        static const std::map<std::string, int> known = {
            {"TITLE", 0}, {"XUNITS", 0}, {"YUNITS", 0}, {"FIRSTX", 0}, {"LASTX", 0},
            {"NPOINTS", 0}, {"XFACTOR", 0}, {"YFACTOR", 0}, {"XYDATA", 0}, {"JCAMPDX", 0},
            {"DATATYPE", 0}, {"FIRSTY", 0}, {"END", 0}};
        if (!known.count(label)) s.metadata[to_lower(label)] = value;
    }

    validate(s);
    return s;
}

std::string write_jcamp(const Spectrum& s) {
    validate(s);
    const bool percent = s.y_unit == YUnit::TransmittancePercent;
    const char* yunits = s.y_unit == YUnit::Absorbance ? "ABSORBANCE" : "TRANSMITTANCE";

    std::string out;
    out += "##TITLE=" + (s.id.empty() ? std::string("spectrum") : s.id) + "\n";
    out += "##JCAMP-DX=4.24\n";
    out += "##DATA TYPE=INFRARED SPECTRUM\n";
    out += "##XUNITS=1/CM\n";
    out += std::string("##YUNITS=") + yunits + "\n";
    out += "##XFACTOR=1\n";
    out += "##YFACTOR=1\n";
    out += "##FIRSTX=" + format_sig(s.x.front()) + "\n";
    out += "##LASTX=" + format_sig(s.x.back()) + "\n";
    out += "##NPOINTS=" + std::to_string(s.size()) + "\n";
    out += "##XYDATA=(X++(Y..Y))\n";
    constexpr std::size_t per_line = 6;
    for (std::size_t i = 0; i < s.size(); i += per_line) {
        out += format_sig(s.x[i]);
        for (std::size_t j = i; j < std::min(i + per_line, s.size()); ++j) {
            double y = percent ? s.y[j] / 100.0 : s.y[j];
            out += " " + format_sig(y);
        }
        out += "\n";
    }
    out += "##END=\n";
    return out;
}

// ---------------------------------------------------------------------------
// Files

FileFormat sniff_format(std::string_view text) {
    for (const Line& line : split_lines(text)) {
        std::string_view body = trim(line.text);
        if (body.empty()) continue;
        return body.rfind("##", 0) == 0 ? FileFormat::Jcamp : FileFormat::Csv;
    }
    return FileFormat::Csv;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::Io, "cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) raise(ErrorCode::Io, "error while reading '" + path.string() + "'");
    return buf.str();
}

Spectrum read_spectrum_file(const std::filesystem::path& path, std::optional<FileFormat> format,
                            std::optional<YUnit> unit_override) {
    const std::string text = read_text_file(path);
    const FileFormat fmt = format.value_or(sniff_format(text));
    Spectrum s = fmt == FileFormat::Jcamp ? parse_jcamp(text, unit_override)
                                          : parse_csv(text, unit_override);
    if (s.id.empty()) s.id = path.stem().string();
    if (!s.metadata.count("source")) s.metadata["source"] = path.filename().string();
    return s;
}

void write_spectrum_file(const Spectrum& s, const std::filesystem::path& path, FileFormat format) {
    const std::string text = format == FileFormat::Jcamp ? write_jcamp(s) : write_csv(s);
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) raise(ErrorCode::Io, "error while writing '" + path.string() + "'");
}

} // namespace ftirqc
