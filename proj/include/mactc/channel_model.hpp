#pragma once

#include <array>

namespace mactc {

inline constexpr double kPowerTolerance = 1e-9;

// Amplitude gains and noise-normalized power budgets. Noise variance is 1.
struct ChannelGains {
    double g12 = 0.0;
    double g21 = 0.0;
    double g10 = 0.0;
    double g20 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;

    void validate() const;
    // User indices exchanged.
    ChannelGains swapped() const { return {g21, g12, g20, g10, p2, p1}; }
    bool operator==(const ChannelGains&) const = default;
};

struct PhaseDurations {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha3 = 1.0;

    static PhaseDurations make(double alpha1, double alpha2);
    void validate() const;
    PhaseDurations swapped() const { return make(alpha2, alpha1); }
    bool operator==(const PhaseDurations&) const = default;
};

struct PowerAllocation {
    double rho11 = 0.0;
    double rho22 = 0.0;
    double rho10 = 0.0;
    double rho20 = 0.0;
    double rho13 = 0.0;
    double rho23 = 0.0;

    PowerAllocation swapped() const { return {rho22, rho11, rho20, rho10, rho23, rho13}; }
    std::array<double, 6> as_array() const { return {rho11, rho22, rho10, rho20, rho13, rho23}; }
    static PowerAllocation from_array(const std::array<double, 6>& v) {
        return {v[0], v[1], v[2], v[3], v[4], v[5]};
    }
    bool operator==(const PowerAllocation&) const = default;
};

struct RateConstraints {
    double i1 = 0, i2 = 0, i3 = 0, i4 = 0, i5 = 0, i6 = 0, i7 = 0, i8 = 0;
    double zeta = 0;
    double j1 = 0, j2 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0;

    double smin() const;
    double sum_rate() const { return smin(); }
};

// log2(1 + x); throws DomainError for x < 0.
double capacity(double x);

double eval_zeta(const ChannelGains& ch, const PowerAllocation& pa);

// Absolute residuals of the two power equalities.
std::array<double, 2> power_residuals(const ChannelGains& ch, const PhaseDurations& pd,
                                      const PowerAllocation& pa);

// Throws InfeasibleAllocation on negative powers, power violation, or power
// assigned to a zero-length phase.
void check_allocation(const ChannelGains& ch, const PhaseDurations& pd, const PowerAllocation& pa);

RateConstraints eval_constraints(const ChannelGains& ch, const PhaseDurations& pd,
                                 const PowerAllocation& pa);

// Same formulas without the feasibility check. Used by grid kernels whose
// points are feasible by construction.
RateConstraints eval_constraints_unchecked(const ChannelGains& ch, const PhaseDurations& pd,
                                           const PowerAllocation& pa);

}  // namespace mactc
