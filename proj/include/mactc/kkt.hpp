#pragma once

#include <array>
#include <vector>

#include "mactc/channel_model.hpp"

namespace mactc::kkt {

enum class Term { J1, J2, S1, S2, S3, S4 };

// d[term][var], variables in PowerAllocation order
// (rho11, rho22, rho10, rho20, rho13, rho23), in bits per unit power.
using Jacobian = std::array<std::array<double, 6>, 6>;

Jacobian constraint_gradients(const ChannelGains& ch, const PhaseDurations& pd,
                              const PowerAllocation& pa);

// Problem shape for max t s.t. t <= term (term in active), power equalities,
// rho >= 0. Variables with decision[i] == false are held fixed.
struct Problem {
    std::vector<Term> active;
    std::array<bool, 6> decision{true, true, true, true, true, true};
    std::array<bool, 2> budget{true, true};
    double zero_tol = 1e-12;
};

struct Report {
    double residual = 0.0;
    std::vector<double> lambda;
    std::array<double, 2> nu{0.0, 0.0};
};

// Multipliers are fitted by least squares on the stationarity rows of the
// positive variables plus sum(lambda) = 1. The residual is the largest
// violation of stationarity, dual feasibility at zero variables and
// lambda >= 0, relative to the size of the power-price term.
Report evaluate(const ChannelGains& ch, const PhaseDurations& pd, const PowerAllocation& pa,
                const Problem& problem);

}  // namespace mactc::kkt
