#pragma once

#include <optional>
#include <vector>

#include "mactc/channel_model.hpp"
#include "mactc/kkt.hpp"

namespace mactc::detail {

// Closed-form pieces of the sum-rate algorithm at fixed phases.
struct SumModel {
    ChannelGains ch;
    PhaseDurations pd;
    double g10s, g20s, g12s, g21s;
    double A1, A2;

    SumModel(const ChannelGains& c, double a1, double a2);

    RateConstraints rates(const PowerAllocation& pa) const;
    double f1(double r11, double r22) const;
    double q1(double r11) const;
    double q2(double r22) const;

    struct Inner2a {
        double g;  // 4 g10^2 rho13 = 4 g20^2 rho23
        double r22;
    };
    std::optional<Inner2a> inner2a(double e, double r11) const;
    double f3(double e, double r11) const;
    std::optional<double> rho11_for(double e) const;
    double f2(double e) const;
    std::optional<PowerAllocation> case2a() const;

    PowerAllocation alloc2b(double r13, double r23) const;
    double f4(double r13, double r23) const;
    std::optional<double> rho23_for(double r13) const;
    double f5(double r13) const;
    std::optional<PowerAllocation> case2b() const;

    double ds4_user(double alpha, double gs, double own, double q_own, double g_own, double amp) const;
    PowerAllocation s4_peak() const;
    std::optional<PowerAllocation> s4_only() const;

    std::optional<PowerAllocation> alloc3a(double r10) const;
    double f7(double r10) const;
    std::optional<PowerAllocation> case3a() const;
    double b10(double r11, double r13, double r23) const;
    std::optional<double> rho23_for_3b(double r13) const;
    double f8(double r13) const;
    std::optional<PowerAllocation> case3b() const;

    double kkt(const PowerAllocation& pa, const std::vector<kkt::Term>& active) const;
};

}  // namespace mactc::detail
