#pragma once

#include <random>
#include <string>

#include "mactc/json_io.hpp"

namespace mactc::test {

inline json golden(const std::string& name) { return read_json_file(std::string(MACTC_GOLDEN_DIR) + "/" + name); }

inline ChannelGains gains(double g12, double g21, double g10, double g20, double p1, double p2) {
    return {g12, g21, g10, g20, p1, p2};
}

inline ChannelGains symmetric(double g12, double p = 2.0) { return {g12, g12, 1.0, 1.0, p, p}; }

// Random channel of a given sum family (1 classical, 2 both relay, 3 user 1 only, 4 user 2 only).
inline ChannelGains random_channel(std::mt19937_64& rng, int family) {
    std::uniform_real_distribution<double> base(0.4, 2.0), up(1.2, 6.0), down(0.2, 0.95), pw(0.5, 8.0);
    ChannelGains ch;
    ch.g10 = base(rng);
    ch.g20 = base(rng);
    const bool up1 = family == 2 || family == 3, up2 = family == 2 || family == 4;
    ch.g12 = ch.g10 * (up1 ? up(rng) : down(rng));
    ch.g21 = ch.g20 * (up2 ? up(rng) : down(rng));
    ch.p1 = pw(rng);
    ch.p2 = pw(rng);
    return ch;
}

// Feasible random allocation for the given phases.
inline PowerAllocation random_allocation(std::mt19937_64& rng, const ChannelGains& ch, const PhaseDurations& pd) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    PowerAllocation pa;
    const double f1 = pd.alpha1 > 0.0 ? u(rng) : 0.0, f2 = pd.alpha2 > 0.0 ? u(rng) : 0.0;
    pa.rho11 = pd.alpha1 > 0.0 ? f1 * ch.p1 / pd.alpha1 : 0.0;
    pa.rho22 = pd.alpha2 > 0.0 ? f2 * ch.p2 / pd.alpha2 : 0.0;
    if (pd.alpha3 > 0.0) {
        const double q1 = (1.0 - f1) * ch.p1 / pd.alpha3, q2 = (1.0 - f2) * ch.p2 / pd.alpha3;
        const double s1 = u(rng), s2 = u(rng);
        pa.rho13 = s1 * q1;
        pa.rho10 = q1 - pa.rho13;
        pa.rho23 = s2 * q2;
        pa.rho20 = q2 - pa.rho23;
    }
    return pa;
}

}  // namespace mactc::test
