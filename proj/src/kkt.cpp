#include "mactc/kkt.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace mactc::kkt {

namespace {

constexpr double kSteep = 1e12;  // stands in for an infinite slope at rho = 0

// d/dx of alpha * C(x) where x is the current SNR.
double dcap(double alpha, double x) { return alpha / ((1.0 + x) * std::numbers::ln2); }

enum Var { R11 = 0, R22 = 1, R10 = 2, R20 = 3, R13 = 4, R23 = 5 };

}  // namespace

Jacobian constraint_gradients(const ChannelGains& ch, const PhaseDurations& pd,
                              const PowerAllocation& pa) {
    const double g12s = ch.g12 * ch.g12, g21s = ch.g21 * ch.g21;
    const double g10s = ch.g10 * ch.g10, g20s = ch.g20 * ch.g20;
    const double cross = ch.g10 * ch.g20;

    std::array<double, 6> zero{};
    auto i1 = zero, i2 = zero, i3 = zero, i4 = zero, i5 = zero, d1 = zero, d2 = zero, coop = zero;

    i1[R11] = g12s * dcap(pd.alpha1, g12s * pa.rho11);
    i2[R22] = g21s * dcap(pd.alpha2, g21s * pa.rho22);
    i3[R10] = g10s * dcap(pd.alpha3, g10s * pa.rho10);
    i4[R20] = g20s * dcap(pd.alpha3, g20s * pa.rho20);
    const double k5 = dcap(pd.alpha3, g10s * pa.rho10 + g20s * pa.rho20);
    i5[R10] = g10s * k5;
    i5[R20] = g20s * k5;
    d1[R11] = g10s * dcap(pd.alpha1, g10s * pa.rho11);
    d2[R22] = g20s * dcap(pd.alpha2, g20s * pa.rho22);

    const double kz = dcap(pd.alpha3, eval_zeta(ch, pa));
    auto beam = [&](double own, double other) {
        if (own > 0.0) return cross * std::sqrt(other / own);
        return (other > 0.0 && cross > 0.0) ? kSteep : 0.0;
    };
    coop[R10] = g10s * kz;
    coop[R20] = g20s * kz;
    coop[R13] = (g10s + beam(pa.rho13, pa.rho23)) * kz;
    coop[R23] = (g20s + beam(pa.rho23, pa.rho13)) * kz;

    Jacobian d{};
    for (int v = 0; v < 6; ++v) {
        d[0][v] = i1[v] + i3[v];                  // J1
        d[1][v] = i2[v] + i4[v];                  // J2
        d[2][v] = i1[v] + i2[v] + i5[v];          // S1
        d[3][v] = i2[v] + d1[v] + coop[v];        // S2
        d[4][v] = i1[v] + d2[v] + coop[v];        // S3
        d[5][v] = d1[v] + d2[v] + coop[v];        // S4
    }
    return d;
}

Report evaluate(const ChannelGains& ch, const PhaseDurations& pd, const PowerAllocation& pa,
                const Problem& problem) {
    const Jacobian d = constraint_gradients(ch, pd, pa);
    const auto x = pa.as_array();

    // Power equality gradients; user u owns its three variables.
    std::array<std::array<double, 6>, 2> a{};
    a[0][R11] = pd.alpha1;
    a[0][R10] = a[0][R13] = pd.alpha3;
    a[1][R22] = pd.alpha2;
    a[1][R20] = a[1][R23] = pd.alpha3;

    std::vector<int> budgets;
    for (int u = 0; u < 2; ++u)
        if (problem.budget[u]) budgets.push_back(u);

    std::vector<int> free_vars, zero_vars;
    for (int v = 0; v < 6; ++v) {
        if (!problem.decision[v]) continue;
        bool owned = false;
        for (int u : budgets) owned = owned || a[u][v] != 0.0;
        if (!owned) continue;  // variable of a zero-length phase
        (x[v] > problem.zero_tol ? free_vars : zero_vars).push_back(v);
    }

    const int k = static_cast<int>(problem.active.size());
    const int m = static_cast<int>(budgets.size());
    const int rows = static_cast<int>(free_vars.size()) + 1;

    double gscale = 0.0;
    for (Term t : problem.active)
        for (int v : free_vars) gscale = std::max(gscale, std::abs(d[static_cast<int>(t)][v]));
    if (gscale == 0.0) gscale = 1.0;

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(rows, k + m);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
    for (int r = 0; r < static_cast<int>(free_vars.size()); ++r) {
        const int v = free_vars[r];
        for (int j = 0; j < k; ++j) M(r, j) = d[static_cast<int>(problem.active[j])][v];
        for (int j = 0; j < m; ++j) M(r, k + j) = -a[budgets[j]][v];
    }
    for (int j = 0; j < k; ++j) M(rows - 1, j) = gscale;
    rhs(rows - 1) = gscale;

    const Eigen::VectorXd sol = M.completeOrthogonalDecomposition().solve(rhs);

    Report rep;
    rep.lambda.assign(sol.data(), sol.data() + k);
    for (int j = 0; j < m; ++j) rep.nu[budgets[j]] = sol(k + j);

    auto lagrangian_slope = [&](int v, double& price) {
        double g = 0.0;
        for (int j = 0; j < k; ++j) g += sol(j) * d[static_cast<int>(problem.active[j])][v];
        price = 0.0;
        for (int j = 0; j < m; ++j) price += sol(k + j) * a[budgets[j]][v];
        return g - price;
    };

    double scale = 0.0, worst = 0.0;
    for (int v : free_vars) {
        double price;
        const double s = lagrangian_slope(v, price);
        scale = std::max(scale, std::abs(price));
        worst = std::max(worst, std::abs(s));
    }
    for (int v : zero_vars) {
        double price;
        const double s = lagrangian_slope(v, price);
        scale = std::max(scale, std::abs(price));
        worst = std::max(worst, std::max(0.0, s));
    }
    if (scale == 0.0) scale = gscale;
    for (int j = 0; j < k; ++j) worst = std::max(worst, std::max(0.0, -sol(j)) * gscale);
    double lambda_sum = 0.0;
    for (int j = 0; j < k; ++j) lambda_sum += sol(j);
    worst = std::max(worst, std::abs(lambda_sum - 1.0) * gscale);

    rep.residual = worst / scale;
    return rep;
}

}  // namespace mactc::kkt
