#pragma once

#include <string>
#include <vector>

namespace ftirqc {

/// Proximate split of a wet sample, in mass % with symmetric uncertainties.
/// Closure identities: mc + ts = 100 and vs + ac + fc = ts.
struct ProximateComposition {
    double mc = 0.0; // moisture content
    double ts = 0.0; // total solids
    double vs = 0.0; // volatile solids
    double ac = 0.0; // ash content
    double fc = 0.0; // fixed carbon
    double u_mc = 0.0, u_ts = 0.0, u_vs = 0.0, u_ac = 0.0, u_fc = 0.0;
};

inline constexpr double kDefaultClosureTol = 0.5; // mass %

/// 100 - (mc + vs + ac). Throws OverUnity when the inputs sum past 100 and
/// InvalidArgument when any input is outside [0, 100].
double fixed_carbon(double mc, double vs, double ac);

struct ClosureViolation {
    std::string identity; // "ts closure" or "fc closure"
    double expected = 0.0;
    double actual = 0.0;
    double deviation = 0.0;
};

/// Checks the two closure identities against tol; empty result means both
/// hold. Uncertainties are carried for reporting but take no part here.
std::vector<ClosureViolation> validate_composition(const ProximateComposition& p,
                                                   double tol = kDefaultClosureTol);

/// Builds a composition, deriving ts = 100 - mc and/or fc = 100 - (mc + vs
/// + ac) when those are passed as NaN. All resulting values must land in
/// [0, 100].
ProximateComposition make_composition(double mc, double ts, double vs, double ac, double fc,
                                      double u_mc = 0.0, double u_ts = 0.0, double u_vs = 0.0,
                                      double u_ac = 0.0, double u_fc = 0.0);

} // namespace ftirqc
