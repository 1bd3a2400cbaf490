#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "mactc/channel_model.hpp"

namespace mactc {

enum class IndividualCase { Direct, PdfRepetition, DecodeForward, PdfNoRepetition, TwoHop };

std::string_view to_string(IndividualCase c);
std::optional<IndividualCase> individual_case_from_string(std::string_view s);

struct IndividualSolution {
    double rate = 0.0;
    double alpha1 = 0.0;  // 0 for Direct regardless of the requested value
    PowerAllocation allocation;
    IndividualCase case_id = IndividualCase::Direct;
    double kkt_residual = 0.0;
    // S4 alone binds and J1 is slack. Not one of the printed table cases.
    bool relay_limited = false;
    bool fallback = false;
    std::string diagnostics;

    PhaseDurations phases() const { return PhaseDurations::make(alpha1, 0.0); }
};

// Named constants of the individual-rate algorithm at a partial allocation.
// f2 and f4 are residuals of rho13 with the other powers eliminated.
struct Table1Definitions {
    double a1 = 0, a2 = 0, a3 = 0, a4 = 0, a5 = 0;
    double b1 = 0, b2 = 0;
    double f1 = 0, f3 = 0;
    // rho10 from stationarity of the both-tight case; equals the power
    // constraint's rho10 at the root rho11 of the a4 quadratic.
    double rho10_stationary = 0;
    std::function<double(double)> f2;
    std::function<double(double)> f4;
    // rho11 from the larger quadratic root as a function of rho13.
    std::function<double(double)> rho11_of_rho13;
};

// rho23 is taken as P2 / (1 - alpha1); partial supplies rho11, rho10, rho13.
Table1Definitions table1_definitions(const ChannelGains& ch, double alpha1,
                                     const PowerAllocation& partial);

IndividualSolution maximize_individual_fixed_alpha(const ChannelGains& ch, double alpha1);

}  // namespace mactc
