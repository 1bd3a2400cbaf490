#include "mactc/channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mactc/errors.hpp"

namespace mactc {

namespace {

// alpha * C(x), with 0 * C(.) defined as 0.
double weighted(double alpha, double x) {
    return alpha == 0.0 ? 0.0 : alpha * std::log2(1.0 + x);
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

void ChannelGains::validate() const {
    for (double v : {g12, g21, g10, g20})
        if (!finite_nonneg(v)) throw ParameterError("channel gains must be finite and >= 0");
    if (!finite_nonneg(p1) || !finite_nonneg(p2))
        throw ParameterError("power budgets must be finite and >= 0");
}

PhaseDurations PhaseDurations::make(double alpha1, double alpha2) {
    PhaseDurations pd{alpha1, alpha2, 1.0 - alpha1 - alpha2};
    pd.validate();
    return pd;
}

void PhaseDurations::validate() const {
    if (!(alpha1 >= 0.0) || !(alpha2 >= 0.0) || !(alpha1 + alpha2 <= 1.0))
        throw ParameterError("phase durations need alpha1, alpha2 >= 0 and alpha1 + alpha2 <= 1");
    if (alpha3 != 1.0 - alpha1 - alpha2)
        throw ParameterError("alpha3 must equal 1 - alpha1 - alpha2");
}

double RateConstraints::smin() const { return std::min({s1, s2, s3, s4}); }

double capacity(double x) {
    if (!(x >= 0.0)) throw DomainError("capacity of negative SNR");
    return std::log2(1.0 + x);
}

double eval_zeta(const ChannelGains& ch, const PowerAllocation& pa) {
    return ch.g10 * ch.g10 * (pa.rho10 + pa.rho13) + ch.g20 * ch.g20 * (pa.rho20 + pa.rho23) +
           2.0 * ch.g10 * ch.g20 * std::sqrt(pa.rho13 * pa.rho23);
}

std::array<double, 2> power_residuals(const ChannelGains& ch, const PhaseDurations& pd,
                                      const PowerAllocation& pa) {
    const double u1 = pd.alpha1 * pa.rho11 + pd.alpha3 * (pa.rho10 + pa.rho13);
    const double u2 = pd.alpha2 * pa.rho22 + pd.alpha3 * (pa.rho20 + pa.rho23);
    return {std::abs(u1 - ch.p1), std::abs(u2 - ch.p2)};
}

void check_allocation(const ChannelGains& ch, const PhaseDurations& pd, const PowerAllocation& pa) {
    for (double v : pa.as_array())
        if (!finite_nonneg(v)) throw InfeasibleAllocation("allocation has a negative or non-finite power");
    if (pd.alpha1 == 0.0 && pa.rho11 != 0.0)
        throw InfeasibleAllocation("rho11 must be 0 when alpha1 = 0");
    if (pd.alpha2 == 0.0 && pa.rho22 != 0.0)
        throw InfeasibleAllocation("rho22 must be 0 when alpha2 = 0");
    if (pd.alpha3 == 0.0 && (pa.rho10 != 0.0 || pa.rho20 != 0.0 || pa.rho13 != 0.0 || pa.rho23 != 0.0))
        throw InfeasibleAllocation("phase-3 powers must be 0 when alpha3 = 0");
    const auto r = power_residuals(ch, pd, pa);
    if (r[0] > kPowerTolerance || r[1] > kPowerTolerance) {
        std::ostringstream os;
        os << "power constraint violated (residuals " << r[0] << ", " << r[1] << ")";
        throw InfeasibleAllocation(os.str());
    }
}

RateConstraints eval_constraints_unchecked(const ChannelGains& ch, const PhaseDurations& pd,
                                           const PowerAllocation& pa) {
    const double g12s = ch.g12 * ch.g12, g21s = ch.g21 * ch.g21;
    const double g10s = ch.g10 * ch.g10, g20s = ch.g20 * ch.g20;
    RateConstraints r;
    r.zeta = eval_zeta(ch, pa);
    r.i1 = weighted(pd.alpha1, g12s * pa.rho11);
    r.i2 = weighted(pd.alpha2, g21s * pa.rho22);
    r.i3 = weighted(pd.alpha3, g10s * pa.rho10);
    r.i4 = weighted(pd.alpha3, g20s * pa.rho20);
    r.i5 = weighted(pd.alpha3, g10s * pa.rho10 + g20s * pa.rho20);
    const double d1 = weighted(pd.alpha1, g10s * pa.rho11);
    const double d2 = weighted(pd.alpha2, g20s * pa.rho22);
    const double coop = weighted(pd.alpha3, r.zeta);
    r.i6 = d1 + coop;
    r.i7 = d2 + coop;
    r.i8 = d1 + d2 + coop;
    r.j1 = r.i1 + r.i3;
    r.j2 = r.i2 + r.i4;
    r.s1 = r.i1 + r.i2 + r.i5;
    r.s2 = r.i2 + r.i6;
    r.s3 = r.i1 + r.i7;
    r.s4 = r.i8;
    return r;
}

RateConstraints eval_constraints(const ChannelGains& ch, const PhaseDurations& pd,
                                 const PowerAllocation& pa) {
    ch.validate();
    pd.validate();
    check_allocation(ch, pd, pa);
    return eval_constraints_unchecked(ch, pd, pa);
}

}  // namespace mactc
