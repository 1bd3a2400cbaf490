#include "mactc/reduced_solver.hpp"

#include <algorithm>
#include <cmath>

#include "mactc/numerics.hpp"

namespace mactc::reduced {

namespace {

double c2(double x) { return std::log2(1.0 + x); }

}  // namespace

void split_phase3(const ChannelGains& ch, double q1, double q2, double v, PowerAllocation& pa) {
    const double g10s = ch.g10 * ch.g10, g20s = ch.g20 * ch.g20;
    const double cap_x = g10s * q1, cap_y = g20s * q2;
    v = std::clamp(v, 0.0, cap_x + cap_y);
    const double x = std::clamp(0.5 * v, std::max(0.0, v - cap_y), std::min(cap_x, v));
    const double y = v - x;
    pa.rho13 = g10s > 0.0 ? std::min(q1, x / g10s) : 0.0;
    pa.rho23 = g20s > 0.0 ? std::min(q2, y / g20s) : 0.0;
    pa.rho10 = q1 - pa.rho13;
    pa.rho20 = q2 - pa.rho23;
}

Result individual(const ChannelGains& ch, double alpha1, int iterations) {
    const double beta = 1.0 - alpha1;
    PowerAllocation base;
    base.rho23 = beta > 0.0 ? ch.p2 / beta : 0.0;
    const PhaseDurations pd{alpha1, 0.0, beta};

    auto at = [&](double r11, double r13) {
        PowerAllocation pa = base;
        pa.rho11 = r11;
        const double q1 = alpha1 > 0.0 ? (ch.p1 - alpha1 * r11) / beta : ch.p1 / beta;
        pa.rho13 = std::clamp(r13, 0.0, q1);
        pa.rho10 = q1 - pa.rho13;
        return pa;
    };
    auto value = [&](const PowerAllocation& pa) {
        const auto r = eval_constraints_unchecked(ch, pd, pa);
        return std::min(r.j1, r.s4);
    };
    auto inner = [&](double r11) {
        const double q1 = (ch.p1 - alpha1 * r11) / beta;
        return num::golden_max([&](double r13) { return value(at(r11, r13)); }, 0.0, q1, iterations);
    };

    double r11 = 0.0;
    if (alpha1 > 0.0)
        r11 = num::golden_max([&](double r) { return inner(r).fx; }, 0.0, ch.p1 / alpha1, iterations).x;
    const PowerAllocation pa = at(r11, inner(r11).x);
    return {value(pa), pa};
}

namespace {

// Shared nested search; rates(pa) returns min over the sum constraints.
template <class Rates>
Result nested_sum(const ChannelGains& ch, const PhaseDurations& pd, double cap11, double cap22,
                  double used1, double used2, int iterations, Rates&& rates) {
    const double g10s = ch.g10 * ch.g10, g20s = ch.g20 * ch.g20;
    auto budgets = [&](double r11, double r22, double& q1, double& q2) {
        q1 = std::max(0.0, (ch.p1 - pd.alpha1 * r11 - used1) / pd.alpha3);
        q2 = std::max(0.0, (ch.p2 - pd.alpha2 * r22 - used2) / pd.alpha3);
    };
    auto build = [&](double r11, double r22, double v) {
        PowerAllocation pa;
        pa.rho11 = r11;
        pa.rho22 = r22;
        double q1, q2;
        budgets(r11, r22, q1, q2);
        split_phase3(ch, q1, q2, v, pa);
        return pa;
    };
    auto best_v = [&](double r11, double r22) {
        double q1, q2;
        budgets(r11, r22, q1, q2);
        const double vmax = g10s * q1 + g20s * q2;
        return num::golden_max([&](double v) { return rates(build(r11, r22, v)); }, 0.0, vmax, iterations);
    };
    auto best_r22 = [&](double r11) {
        if (cap22 <= 0.0) return num::Extremum{0.0, best_v(r11, 0.0).fx};
        return num::golden_max([&](double r22) { return best_v(r11, r22).fx; }, 0.0, cap22, iterations);
    };

    double r11 = 0.0;
    if (cap11 > 0.0)
        r11 = num::golden_max([&](double r) { return best_r22(r).fx; }, 0.0, cap11, iterations).x;
    const double r22 = best_r22(r11).x;
    const PowerAllocation pa = build(r11, r22, best_v(r11, r22).x);
    return {rates(pa), pa};
}

}  // namespace

Result sum(const ChannelGains& ch, const PhaseDurations& pd, int iterations) {
    if (pd.alpha3 <= 0.0) {
        PowerAllocation pa;
        pa.rho11 = pd.alpha1 > 0.0 ? ch.p1 / pd.alpha1 : 0.0;
        pa.rho22 = pd.alpha2 > 0.0 ? ch.p2 / pd.alpha2 : 0.0;
        return {eval_constraints_unchecked(ch, pd, pa).smin(), pa};
    }
    const double cap11 = pd.alpha1 > 0.0 ? ch.p1 / pd.alpha1 : 0.0;
    const double cap22 = pd.alpha2 > 0.0 ? ch.p2 / pd.alpha2 : 0.0;
    return nested_sum(ch, pd, cap11, cap22, 0.0, 0.0, iterations,
                      [&](const PowerAllocation& pa) { return eval_constraints_unchecked(ch, pd, pa).smin(); });
}

Result sum_augmented(const ChannelGains& ch, const PhaseDurations& pd, double dag1, double dag2,
                     int iterations) {
    const double g12s = ch.g12 * ch.g12, g21s = ch.g21 * ch.g21;
    const double g10s = ch.g10 * ch.g10, g20s = ch.g20 * ch.g20;
    const double a1 = pd.alpha1, a2 = pd.alpha2, a3 = pd.alpha3;
    auto rates = [&](const PowerAllocation& pa) {
        const double relay1 = a1 * c2(g12s * pa.rho11 / (1.0 + g12s * dag1));
        const double relay2 = a2 * c2(g21s * pa.rho22 / (1.0 + g21s * dag2));
        const double own1 = a1 * c2(g10s * dag1);
        const double own2 = a2 * c2(g20s * dag2);
        const double d1 = a1 * c2(g10s * (pa.rho11 + dag1));
        const double d2 = a2 * c2(g20s * (pa.rho22 + dag2));
        const double coop = a3 * c2(eval_zeta(ch, pa));
        const double s1 = relay1 + own1 + relay2 + own2 + a3 * c2(g10s * pa.rho10 + g20s * pa.rho20);
        const double s2 = relay2 + d1 + coop;
        const double s3 = relay1 + d2 + coop;
        const double s4 = d1 + d2 + coop;
        return std::min({s1, s2, s3, s4});
    };
    const double cap11 = a1 > 0.0 ? std::max(0.0, ch.p1 / a1 - dag1) : 0.0;
    const double cap22 = a2 > 0.0 ? std::max(0.0, ch.p2 / a2 - dag2) : 0.0;
    return nested_sum(ch, pd, cap11, cap22, a1 * dag1, a2 * dag2, iterations, rates);
}

}  // namespace mactc::reduced
