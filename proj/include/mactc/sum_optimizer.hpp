#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "mactc/channel_model.hpp"

namespace mactc {

// Family 2 has four private-power patterns; the printed table covers the two
// symmetric ones. Family 4 is family 3 with users exchanged.
enum class SumCase {
    ClassicalMac,
    BothPdf,
    BothDf,
    User1PdfUser2Df,
    User1DfUser2Pdf,
    User1PdfUser2Direct,
    User1DfUser2Direct,
    User2PdfUser1Direct,
    User2DfUser1Direct,
};

std::string_view to_string(SumCase c);
std::optional<SumCase> sum_case_from_string(std::string_view s);
// 1 classical, 2 both cooperate, 3 user 1 relays only, 4 user 2 relays only.
int case_family(SumCase c);
SumCase mirror(SumCase c);

struct SumSolution {
    double sum_rate = 0.0;
    PhaseDurations phases;  // effective phases; families 1, 3, 4 zero some of them
    PowerAllocation allocation;
    SumCase case_id = SumCase::ClassicalMac;
    double kkt_residual = 0.0;
    // S4 alone binds with S1 slack.
    bool s4_only = false;
    bool fallback = false;
    std::string diagnostics;
};

SumSolution maximize_sum_fixed_alphas(const ChannelGains& ch, double alpha1, double alpha2);

// Equal gains, equal budgets, alpha1 = alpha2 = alpha in [0, 0.5).
SumSolution maximize_sum_symmetric(const ChannelGains& ch, double alpha);

// Constants of the sum-rate algorithm at a partial allocation. Constants that
// reference undefined symbols in the source are not provided.
struct Table2Definitions {
    double a1 = 0, a2 = 0, a3 = 0, a4 = 0, a5 = 0, a6 = 0, a7 = 0, a8 = 0, a9 = 0, a10 = 0, a11 = 0;
    double b1 = 0, b2 = 0, b3 = 0, b4 = 0, b5 = 0, b8 = 0, b9 = 0, b10 = 0;
    double f1 = 0, f6 = 0;
    // f2(a6) solves f3 for rho11 internally; NaN when f3 has no root.
    std::function<double(double)> f2;
    // f3(rho11) at the partial allocation's a6.
    std::function<double(double)> f3;
    // f4(rho23) at the partial allocation's rho13, privates zero.
    std::function<double(double)> f4;
    // f5(rho13) solves f4 for rho23 internally.
    std::function<double(double)> f5;
    // Family 3 (alpha2 = 0): f7(rho10); f8(rho13) solves for rho23 internally.
    std::function<double(double)> f7;
    std::function<double(double)> f8;
};

Table2Definitions table2_definitions(const ChannelGains& ch, double alpha1, double alpha2,
                                     const PowerAllocation& partial);

struct GainReport {
    double delta_r1 = 0, delta_r2 = 0, delta_sum = 0;     // P -> infinity
    double finite_r1 = 0, finite_r2 = 0, finite_sum = 0;  // S4max minus the MAC rates
};

GainReport gain_vs_mac(const ChannelGains& ch);

struct AugmentedResult {
    double dag1 = 0.0;
    double dag2 = 0.0;
    double rate_augmented = 0.0;
    double rate_main = 0.0;
};

// Optimizes the scheme that also sends private parts in the broadcast phases
// (powers dag1, dag2) and reports the best dagger powers.
AugmentedResult augmented_optimum(const ChannelGains& ch, double alpha1, double alpha2);

}  // namespace mactc
