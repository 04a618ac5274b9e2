#include "core/proximate.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace ftirqc {

namespace {

void require_mass_percent(const char* name, double value) {
    if (!std::isfinite(value) || value < 0.0 || value > 100.0)
        raise(ErrorCode::InvalidArgument,
              std::string(name) + " = " + std::to_string(value) + " is outside [0, 100]");
}

} // namespace

double fixed_carbon(double mc, double vs, double ac) {
    require_mass_percent("mc", mc);
    require_mass_percent("vs", vs);
    require_mass_percent("ac", ac);
    const double sum = mc + vs + ac;
    if (sum > 100.0)
        raise(ErrorCode::OverUnity, "mc + vs + ac = " + std::to_string(sum) + " exceeds 100");
    return 100.0 - sum;
}

std::vector<ClosureViolation> validate_composition(const ProximateComposition& p, double tol) {
    if (!(tol >= 0.0)) raise(ErrorCode::InvalidArgument, "tol must be >= 0");
    std::vector<ClosureViolation> violations;

    const double ts_actual = p.mc + p.ts;
    if (std::abs(ts_actual - 100.0) > tol)
        violations.push_back({"ts closure", 100.0, ts_actual, std::abs(ts_actual - 100.0)});

    const double fc_actual = p.vs + p.ac + p.fc;
    if (std::abs(fc_actual - p.ts) > tol)
        violations.push_back({"fc closure", p.ts, fc_actual, std::abs(fc_actual - p.ts)});

    return violations;
}

ProximateComposition make_composition(double mc, double ts, double vs, double ac, double fc,
                                      double u_mc, double u_ts, double u_vs, double u_ac,
                                      double u_fc) {
    if (std::isnan(ts)) ts = 100.0 - mc;
    if (std::isnan(fc)) fc = fixed_carbon(mc, vs, ac);

    ProximateComposition p{mc, ts, vs, ac, fc, u_mc, u_ts, u_vs, u_ac, u_fc};
    require_mass_percent("mc", p.mc);
    require_mass_percent("ts", p.ts);
    require_mass_percent("vs", p.vs);
    require_mass_percent("ac", p.ac);
    require_mass_percent("fc", p.fc);
    for (double u : {p.u_mc, p.u_ts, p.u_vs, p.u_ac, p.u_fc})
        if (!std::isfinite(u) || u < 0.0)
            raise(ErrorCode::InvalidArgument, "uncertainties must be finite and >= 0");
    return p;
}

} // namespace ftirqc
