#include "core/preprocess.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace ftirqc {

const char* baseline_method_name(BaselineMethod method) noexcept {
    switch (method) {
        case BaselineMethod::LinearEndpoints: return "linear_endpoints";
        case BaselineMethod::RubberBand: return "rubberband";
        case BaselineMethod::None: return "none";
    }
    return "unknown";
}

std::optional<BaselineMethod> baseline_method_from_token(std::string_view token) {
    std::string t;
    for (char c : token) {
        if (c == '-') c = '_';
        t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (t == "linear_endpoints" || t == "linear") return BaselineMethod::LinearEndpoints;
    if (t == "rubberband" || t == "rubber_band") return BaselineMethod::RubberBand;
    if (t == "none") return BaselineMethod::None;
    return std::nullopt;
}

void validate(const PreprocessConfig& cfg) {
    if (!(cfg.grid_step > 0.0))
        raise(ErrorCode::InvalidConfig, "grid_step must be > 0");
    if (cfg.smooth_window < 3 || cfg.smooth_window % 2 == 0)
        raise(ErrorCode::InvalidConfig, "smooth_window must be odd and >= 3");
    if (cfg.smooth_poly_order < 0 || cfg.smooth_poly_order >= cfg.smooth_window)
        raise(ErrorCode::InvalidConfig, "smooth_poly_order must be in [0, smooth_window)");
}

double interp_linear(std::span<const double> xs, std::span<const double> ys, double xq) {
    if (xs.size() < 2) raise(ErrorCode::InvalidArgument, "need at least 2 nodes");
    if (xq < xs.front() || xq > xs.back())
        raise(ErrorCode::InvalidArgument, "query point outside node range (no extrapolation)");
    auto it = std::upper_bound(xs.begin(), xs.end(), xq);
    std::size_t hi = std::min<std::size_t>(static_cast<std::size_t>(it - xs.begin()), xs.size() - 1);
    if (hi == 0) hi = 1;
    std::size_t lo = hi - 1;
    const double t = (xq - xs[lo]) / (xs[hi] - xs[lo]);
    // Convex form: exact at nodes, no overshoot from rounding.
    return ys[lo] * (1.0 - t) + ys[hi] * t;
}

Spectrum resample_uniform(const Spectrum& s, double step) {
    validate(s);
    if (!(step > 0.0)) raise(ErrorCode::InvalidArgument, "step must be > 0");

    // Index fuzz keeps grid points that land on the range ends despite
    // floating rounding of x/step.
    const double k_first = std::ceil(s.x_min() / step - 1e-9);
    const double k_last = std::floor(s.x_max() / step + 1e-9);
    const long n_out = k_last >= k_first ? static_cast<long>(k_last - k_first) + 1 : 0;
    if (n_out < static_cast<long>(kMinPoints))
        raise(ErrorCode::StepTooLarge, "step " + std::to_string(step) + " yields " +
                                           std::to_string(n_out) + " points, need at least " +
                                           std::to_string(kMinPoints));

    Spectrum out;
    out.id = s.id;
    out.y_unit = s.y_unit;
    out.metadata = s.metadata;
    out.x.reserve(static_cast<std::size_t>(n_out));
    out.y.reserve(static_cast<std::size_t>(n_out));
    for (long k = 0; k < n_out; ++k) {
        double xq = (k_first + static_cast<double>(k)) * step;
        xq = std::clamp(xq, s.x_min(), s.x_max());
        out.x.push_back(xq);
        out.y.push_back(interp_linear(s.x, s.y, xq));
    }
    return out;
}

namespace {

// Solves the small SPD system M z = e0 by Gaussian elimination with partial
// pivoting. M is (order+1)^2; order is tiny in practice.
std::vector<double> solve_first_column(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    std::vector<double> rhs(n, 0.0);
    rhs[0] = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        if (m[col][col] == 0.0)
            raise(ErrorCode::InvalidConfig, "singular Savitzky-Golay design matrix");
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> z(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = rhs[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= m[i][c] * z[c];
        z[i] = acc / m[i][i];
    }
    return z;
}

} // namespace

std::vector<double> savitzky_golay_weights(int window, int poly_order) {
    if (window < 3 || window % 2 == 0 || poly_order < 0 || poly_order >= window)
        raise(ErrorCode::InvalidConfig, "invalid Savitzky-Golay window/order");
    const int half = window / 2;
    const std::size_t terms = static_cast<std::size_t>(poly_order) + 1;

    // Normal-equation matrix M[k][l] = sum_j t_j^(k+l) over offsets t_j.
    std::vector<std::vector<double>> m(terms, std::vector<double>(terms, 0.0));
    for (int j = -half; j <= half; ++j) {
        double power = 1.0;
        std::vector<double> powers(2 * terms - 1);
        for (std::size_t p = 0; p < powers.size(); ++p) {
            powers[p] = power;
            power *= j;
        }
        for (std::size_t k = 0; k < terms; ++k)
            for (std::size_t l = 0; l < terms; ++l) m[k][l] += powers[k + l];
    }

    const std::vector<double> z = solve_first_column(std::move(m));
    std::vector<double> weights(static_cast<std::size_t>(window));
    for (int j = -half; j <= half; ++j) {
        double acc = 0.0, power = 1.0;
        for (std::size_t k = 0; k < terms; ++k) {
            acc += z[k] * power;
            power *= j;
        }
        weights[static_cast<std::size_t>(j + half)] = acc;
    }
    return weights;
}

namespace {

void require_uniform_grid(const Spectrum& s, const char* op) {
    const double dx = (s.x_max() - s.x_min()) / static_cast<double>(s.size() - 1);
    for (std::size_t i = 1; i < s.size(); ++i)
        if (std::abs((s.x[i] - s.x[i - 1]) - dx) > 1e-6 * std::abs(dx))
            raise(ErrorCode::InvalidArgument, std::string(op) + " requires a uniform grid");
}

} // namespace

Spectrum smooth(const Spectrum& s, const PreprocessConfig& cfg) {
    validate(s);
    validate(cfg);
    require_uniform_grid(s, "smooth");
    const int n = static_cast<int>(s.size());
    if (cfg.smooth_window > n)
        raise(ErrorCode::WindowTooLarge, "window " + std::to_string(cfg.smooth_window) +
                                             " exceeds spectrum length " + std::to_string(n));

    const std::vector<double> w = savitzky_golay_weights(cfg.smooth_window, cfg.smooth_poly_order);
    const int half = cfg.smooth_window / 2;
    Spectrum out = s;
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = -half; j <= half; ++j) {
            int idx = i + j;
            if (idx < 0) idx = -idx;                       // mirror about the first sample
            if (idx >= n) idx = 2 * (n - 1) - idx;         // mirror about the last sample
            acc += w[static_cast<std::size_t>(j + half)] * s.y[static_cast<std::size_t>(idx)];
        }
        out.y[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

namespace {

// Indices of the lower convex hull vertices (monotone chain; x already
// strictly increasing). First and last points are always vertices.
std::vector<std::size_t> lower_hull_indices(const std::vector<double>& x,
                                            const std::vector<double>& y) {
    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < x.size(); ++i) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2];
            const std::size_t b = hull[hull.size() - 1];
            const double cross =
                (x[b] - x[a]) * (y[i] - y[a]) - (y[b] - y[a]) * (x[i] - x[a]);
            if (cross <= 0.0)
                hull.pop_back(); // b is on or above the chord a->i
            else
                break;
        }
        hull.push_back(i);
    }
    return hull;
}

} // namespace

Spectrum baseline_correct(const Spectrum& s, BaselineMethod method) {
    validate(s);
    if (s.y_unit != YUnit::Absorbance)
        raise(ErrorCode::InvalidArgument, "baseline correction requires an absorbance spectrum");
    if (method == BaselineMethod::None) return s;

    Spectrum out = s;
    const std::size_t n = s.size();

    if (method == BaselineMethod::LinearEndpoints) {
        const double x0 = s.x.front(), x1 = s.x.back();
        const double y0 = s.y.front(), y1 = s.y.back();
        for (std::size_t i = 0; i < n; ++i) {
            const double t = (s.x[i] - x0) / (x1 - x0);
            out.y[i] = s.y[i] - (y0 * (1.0 - t) + y1 * t);
        }
        return out;
    }

    const std::vector<std::size_t> hull = lower_hull_indices(s.x, s.y);
    std::size_t seg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (seg + 2 < hull.size() && s.x[hull[seg + 1]] < s.x[i]) ++seg;
        const std::size_t a = hull[seg], b = hull[seg + 1];
        const double t = (s.x[i] - s.x[a]) / (s.x[b] - s.x[a]);
        const double baseline = s.y[a] * (1.0 - t) + s.y[b] * t;
        // Hull vertices land on exactly 0; clamp rounding dust elsewhere.
        out.y[i] = std::max(s.y[i] - baseline, 0.0);
    }
    return out;
}

} // namespace ftirqc
