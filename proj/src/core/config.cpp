#include "core/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <string>

#include "core/errors.hpp"

namespace ftirqc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double to_number(std::string_view token, const std::string& what) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value))
        raise(ErrorCode::InvalidConfig, "cannot parse number '" + std::string(token) + "' for " + what);
    return value;
}

long to_integer(std::string_view token, const std::string& what) {
    const double v = to_number(token, what);
    if (v != std::floor(v))
        raise(ErrorCode::InvalidConfig, what + " must be an integer, got '" + std::string(token) + "'");
    return static_cast<long>(v);
}

bool to_bool(std::string_view token, const std::string& what) {
    std::string t;
    for (char c : trim(token)) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "true" || t == "yes" || t == "on" || t == "1") return true;
    if (t == "false" || t == "no" || t == "off" || t == "0") return false;
    raise(ErrorCode::InvalidConfig, what + " must be a boolean, got '" + std::string(token) + "'");
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        if (end == std::string_view::npos) end = text.size();
        out.push_back(trim(text.substr(start, end - start)));
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

void for_each_line(std::string_view text, auto&& fn) {
    std::size_t start = 0, number = 1;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) fn(line, number);
        if (end == text.size()) break;
        start = end + 1;
        ++number;
    }
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
    std::map<std::string, std::string> out;
    for_each_line(text, [&](std::string_view line, std::size_t number) {
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            raise(ErrorCode::InvalidConfig,
                  "line " + std::to_string(number) + ": expected 'key = value'");
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty())
            raise(ErrorCode::InvalidConfig, "line " + std::to_string(number) + ": empty key");
        if (!out.emplace(key, value).second)
            raise(ErrorCode::InvalidConfig, "repeated key '" + key + "'");
    });
    return out;
}

void reject_unknown(const std::map<std::string, std::string>& kv,
                    std::initializer_list<std::string_view> known) {
    for (const auto& [key, value] : kv) {
        bool ok = false;
        for (auto k : known) ok = ok || key == k;
        if (!ok) raise(ErrorCode::InvalidConfig, "unknown key '" + key + "'");
    }
}

} // namespace

PreprocessConfig parse_preprocess_config(std::string_view text) {
    auto kv = parse_key_values(text);
    reject_unknown(kv, {"grid_step", "smooth_window", "smooth_poly_order", "baseline_method",
                        "smooth"});
    PreprocessConfig cfg;
    if (auto it = kv.find("grid_step"); it != kv.end())
        cfg.grid_step = to_number(it->second, "grid_step");
    if (auto it = kv.find("smooth_window"); it != kv.end())
        cfg.smooth_window = static_cast<int>(to_integer(it->second, "smooth_window"));
    if (auto it = kv.find("smooth_poly_order"); it != kv.end())
        cfg.smooth_poly_order = static_cast<int>(to_integer(it->second, "smooth_poly_order"));
    if (auto it = kv.find("baseline_method"); it != kv.end()) {
        auto method = baseline_method_from_token(it->second);
        if (!method)
            raise(ErrorCode::InvalidConfig, "unknown baseline_method '" + it->second + "'");
        cfg.baseline_method = *method;
    }
    if (auto it = kv.find("smooth"); it != kv.end())
        cfg.smooth_enabled = to_bool(it->second, "smooth");
    validate(cfg);
    return cfg;
}

ClassificationGrid parse_grid_config(std::string_view text) {
    auto kv = parse_key_values(text);
    reject_unknown(kv, {"kerogen_a_breaks", "vr_map", "maturity_breaks"});
    ClassificationGrid grid;

    auto parse_breaks = [](const std::string& value, const char* what) {
        auto parts = split(value, ',');
        if (parts.size() != 3)
            raise(ErrorCode::InvalidConfig, std::string(what) + " needs exactly 3 values");
        return std::array<double, 3>{to_number(parts[0], what), to_number(parts[1], what),
                                     to_number(parts[2], what)};
    };
    if (auto it = kv.find("kerogen_a_breaks"); it != kv.end())
        grid.kerogen_a_breaks = parse_breaks(it->second, "kerogen_a_breaks");
    if (auto it = kv.find("maturity_breaks"); it != kv.end())
        grid.maturity_breaks = parse_breaks(it->second, "maturity_breaks");
    if (auto it = kv.find("vr_map"); it != kv.end()) {
        grid.vr_map.clear();
        for (auto knot : split(it->second, ',')) {
            std::size_t colon = knot.find(':');
            if (colon == std::string_view::npos)
                raise(ErrorCode::InvalidConfig, "vr_map knots must look like 'c:vr'");
            grid.vr_map.push_back({to_number(knot.substr(0, colon), "vr_map c"),
                                   to_number(knot.substr(colon + 1), "vr_map vr")});
        }
    }
    validate(grid);
    return grid;
}

std::vector<BandDefinition> parse_band_table(std::string_view text) {
    std::vector<BandDefinition> table;
    for_each_line(text, [&](std::string_view line, std::size_t number) {
        auto fields = split(line, ',');
        if (fields.size() < 4 || fields.size() > 5)
            raise(ErrorCode::InvalidConfig,
                  "line " + std::to_string(number) +
                      ": expected 'label, lo, hi, group[, vibration]'");
        BandDefinition band;
        band.label = std::string(fields[0]);
        band.lo = to_number(fields[1], "band lo");
        band.hi = to_number(fields[2], "band hi");
        band.group = std::string(fields[3]);
        if (fields.size() == 5) band.vibration = std::string(fields[4]);
        if (!(band.lo < band.hi) || band.lo < 800.0 || band.hi > 4000.0)
            raise(ErrorCode::InvalidConfig,
                  "line " + std::to_string(number) + ": band [" + std::to_string(band.lo) + ", " +
                      std::to_string(band.hi) + "] must satisfy lo < hi within [800, 4000]");
        table.push_back(std::move(band));
    });
    if (table.empty()) raise(ErrorCode::InvalidConfig, "band table is empty");
    return table;
}

ProximateComposition parse_composition(std::string_view text) {
    auto kv = parse_key_values(text);
    reject_unknown(kv, {"mc", "ts", "vs", "ac", "fc", "u_mc", "u_ts", "u_vs", "u_ac", "u_fc"});

    auto value_of = [&](const char* key, double fallback) {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : to_number(it->second, key);
    };
    for (const char* required : {"mc", "vs", "ac"})
        if (!kv.count(required))
            raise(ErrorCode::InvalidConfig, std::string("composition needs '") + required + "'");

    const double nan = std::nan("");
    return make_composition(value_of("mc", nan), value_of("ts", nan), value_of("vs", nan),
                            value_of("ac", nan), value_of("fc", nan), value_of("u_mc", 0.0),
                            value_of("u_ts", 0.0), value_of("u_vs", 0.0), value_of("u_ac", 0.0),
                            value_of("u_fc", 0.0));
}

} // namespace ftirqc
