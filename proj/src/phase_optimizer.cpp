#include "mactc/phase_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "mactc/errors.hpp"
#include "mactc/individual_optimizer.hpp"
#include "mactc/sum_optimizer.hpp"

namespace mactc {

std::string_view to_string(SearchMethod m) { return m == SearchMethod::Grid ? "Grid" : "Interpolated"; }

namespace {

constexpr double kTop = 1.0 - kPhaseEpsilon;

PhaseSearchResult from_individual(const IndividualSolution& s) {
    PhaseSearchResult r;
    r.best_alphas = s.phases();
    r.best_rate = s.rate;
    r.allocation = s.allocation;
    r.case_id = std::string(to_string(s.case_id));
    r.kkt_residual = s.kkt_residual;
    r.fallback = s.fallback;
    return r;
}

PhaseSearchResult from_sum(const SumSolution& s) {
    PhaseSearchResult r;
    r.best_alphas = s.phases;
    r.best_rate = s.sum_rate;
    r.allocation = s.allocation;
    r.case_id = std::string(to_string(s.case_id));
    r.kkt_residual = s.kkt_residual;
    r.fallback = s.fallback;
    return r;
}

// Evaluates every point, keeps samples in input order and the first best.
template <class Solve>
PhaseSearchResult run_grid(const std::vector<std::array<double, 2>>& pts, Exec exec, Solve&& solve) {
    if (pts.empty()) throw ParameterError("empty phase grid");
    std::vector<PhaseSearchResult> res(pts.size());
    for_each_index(exec, pts.size(), [&](std::size_t i) { res[i] = solve(pts[i][0], pts[i][1]); });
    std::size_t best = 0;
    for (std::size_t i = 1; i < res.size(); ++i)
        if (res[i].best_rate > res[best].best_rate) best = i;
    PhaseSearchResult out = res[best];
    out.method = SearchMethod::Grid;
    for (std::size_t i = 0; i < pts.size(); ++i)
        out.samples.push_back({PhaseDurations::make(pts[i][0], pts[i][1]), res[i].best_rate});
    return out;
}

void check_step(double step, double upper) {
    if (!(step > 0.0 && step < upper)) throw ParameterError("phase step out of range");
}

std::vector<double> axis(double step, double top) {
    std::vector<double> v;
    for (int k = 0;; ++k) {
        const double a = k * step;
        if (a >= top - 1e-12) break;
        v.push_back(a);
    }
    return v;
}

PhaseSearchResult solve_individual(const ChannelGains& ch, double a1) {
    return from_individual(maximize_individual_fixed_alpha(ch, a1));
}

PhaseSearchResult solve_sum(const ChannelGains& ch, double a1, double a2) {
    return from_sum(maximize_sum_fixed_alphas(ch, a1, a2));
}

// Keeps (a1, a2) inside alpha1 + alpha2 <= 1 - eps.
std::array<double, 2> into_simplex(double a1, double a2) {
    a1 = std::clamp(a1, 0.0, kTop);
    a2 = std::clamp(a2, 0.0, kTop);
    if (a1 + a2 > kTop) {
        const double s = kTop / (a1 + a2);
        a1 *= s;
        a2 = std::min(a2 * s, kTop - a1);
    }
    return {a1, a2};
}

}  // namespace

PhaseSearchResult grid_search_individual(const ChannelGains& ch, double step, Exec exec) {
    ch.validate();
    check_step(step, 1.0);
    std::vector<std::array<double, 2>> pts;
    for (double a : axis(step, kTop)) pts.push_back({a, 0.0});
    pts.push_back({kTop, 0.0});
    return run_grid(pts, exec, [&](double a1, double) { return solve_individual(ch, a1); });
}

PhaseSearchResult grid_search_sum(const ChannelGains& ch, double step, Exec exec) {
    ch.validate();
    check_step(step, 1.0);
    std::vector<std::array<double, 2>> pts;
    const int n = static_cast<int>(std::floor(1.0 / step + 1e-9));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) pts.push_back(into_simplex(i * step, j * step));
    return run_grid(pts, exec, [&](double a1, double a2) { return solve_sum(ch, a1, a2); });
}

PhaseSearchResult grid_search_sum_symmetric(const ChannelGains& ch, double step, Exec exec) {
    ch.validate();
    check_step(step, 0.5);
    std::vector<std::array<double, 2>> pts;
    for (double a : axis(step, 0.5)) pts.push_back({a, a});
    return run_grid(pts, exec, [&](double a, double) { return from_sum(maximize_sum_symmetric(ch, a)); });
}

std::optional<double> quadratic_vertex(const std::array<double, 3>& x, const std::array<double, 3>& y) {
    if (!(x[0] < x[1] && x[1] < x[2])) return std::nullopt;
    const double d1 = (y[1] - y[0]) / (x[1] - x[0]);
    const double d2 = (y[2] - y[1]) / (x[2] - x[1]);
    const double a = (d2 - d1) / (x[2] - x[0]);
    if (!(a < 0.0)) return std::nullopt;
    const double b = d1 - a * (x[0] + x[1]);
    return -b / (2.0 * a);
}

namespace {

// Coarse 1-D grid of l points over [0, span] (the last clamped to top), then
// one solve at the vertex of the parabola through the best sample and its neighbours.
template <class Solve>
PhaseSearchResult interpolate_1d(int l, double span, double top, Exec exec, Solve&& solve) {
    std::vector<std::array<double, 2>> pts;
    for (int k = 0; k < l; ++k) pts.push_back({std::min(top, span * k / (l - 1)), 0.0});
    PhaseSearchResult grid = run_grid(pts, exec, [&](double a, double) { return solve(a); });

    std::size_t best = 0;
    for (std::size_t i = 1; i < grid.samples.size(); ++i)
        if (grid.samples[i].rate > grid.samples[best].rate) best = i;
    const std::size_t c = std::clamp<std::size_t>(best, 1, pts.size() - 2);
    const std::array<double, 3> xs{pts[c - 1][0], pts[c][0], pts[c + 1][0]};
    const std::array<double, 3> ys{grid.samples[c - 1].rate, grid.samples[c].rate, grid.samples[c + 1].rate};
    const auto v = quadratic_vertex(xs, ys);
    if (!v) return grid;
    PhaseSearchResult out = solve(std::clamp(*v, 0.0, top));
    out.method = SearchMethod::Interpolated;
    out.samples = std::move(grid.samples);
    return out;
}

}  // namespace

PhaseSearchResult interpolate_individual(const ChannelGains& ch, int l, Exec exec) {
    ch.validate();
    if (l < 3) throw ParameterError("interpolation needs at least 3 coarse points");
    return interpolate_1d(l, 1.0, kTop, exec, [&](double a) { return solve_individual(ch, a); });
}

PhaseSearchResult interpolate_sum_symmetric(const ChannelGains& ch, int l, Exec exec) {
    ch.validate();
    if (l < 3) throw ParameterError("interpolation needs at least 3 coarse points");
    return interpolate_1d(l, 0.5, 0.5 * kTop, exec, [&](double a) { return from_sum(maximize_sum_symmetric(ch, a)); });
}

std::optional<std::array<double, 5>> fit_bivariate(const std::array<std::array<double, 2>, 5>& a,
                                                   const std::array<double, 5>& y) {
    Eigen::Matrix<double, 5, 5> m;
    Eigen::Matrix<double, 5, 1> rhs;
    for (int i = 0; i < 5; ++i) {
        m.row(i) << 1.0, a[i][0], a[i][1], a[i][0] * a[i][0], a[i][1] * a[i][1];
        rhs(i) = y[i];
    }
    Eigen::FullPivLU<Eigen::Matrix<double, 5, 5>> lu(m);
    if (!lu.isInvertible()) return std::nullopt;
    const Eigen::Matrix<double, 5, 1> c = lu.solve(rhs);
    return std::array<double, 5>{c(0), c(1), c(2), c(3), c(4)};
}

std::array<double, 2> bivariate_vertex(const std::array<double, 5>& c, std::array<double, 2> fallback) {
    std::array<double, 2> v = fallback;
    if (c[3] < 0.0) v[0] = -c[1] / (2.0 * c[3]);
    if (c[4] < 0.0) v[1] = -c[2] / (2.0 * c[4]);
    return v;
}

PhaseSearchResult interpolate_sum(const ChannelGains& ch, int l, int t, Exec exec) {
    ch.validate();
    if (l < 3 || t < 3) throw ParameterError("interpolation needs at least 3 points per axis");
    // Lattice index -> sample index, -1 where alpha1 + alpha2 > 1.
    std::vector<std::array<double, 2>> pts;
    std::vector<int> slot(static_cast<std::size_t>(l * t), -1);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < t; ++j) {
            const double a1 = static_cast<double>(i) / (l - 1), a2 = static_cast<double>(j) / (t - 1);
            if (a1 + a2 > 1.0 + 1e-12) continue;
            slot[static_cast<std::size_t>(i * t + j)] = static_cast<int>(pts.size());
            pts.push_back(into_simplex(a1, a2));
        }
    PhaseSearchResult grid = run_grid(pts, exec, [&](double a1, double a2) { return solve_sum(ch, a1, a2); });

    int bi = 0, bj = 0;
    double br = -1.0;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < t; ++j) {
            const int s = slot[static_cast<std::size_t>(i * t + j)];
            if (s >= 0 && grid.samples[static_cast<std::size_t>(s)].rate > br) {
                br = grid.samples[static_cast<std::size_t>(s)].rate;
                bi = i;
                bj = j;
            }
        }
    auto at = [&](int i, int j) {
        if (i < 0 || j < 0 || i >= l || j >= t) return -1;
        return slot[static_cast<std::size_t>(i * t + j)];
    };
    // Two neighbours along one axis, one-sided at the lattice edge.
    auto pick = [&](int di, int dj, std::array<int, 2>& out) {
        for (const auto& [p, q] : {std::pair{-1, 1}, std::pair{1, 2}, std::pair{-2, -1}}) {
            const int s1 = at(bi + p * di, bj + p * dj), s2 = at(bi + q * di, bj + q * dj);
            if (s1 >= 0 && s2 >= 0) {
                out = {s1, s2};
                return true;
            }
        }
        return false;
    };
    std::array<int, 2> n1{}, n2{};
    if (!pick(1, 0, n1) || !pick(0, 1, n2)) return grid;
    const std::array<int, 5> idx{at(bi, bj), n1[0], n1[1], n2[0], n2[1]};
    std::array<std::array<double, 2>, 5> xs{};
    std::array<double, 5> ys{};
    for (int k = 0; k < 5; ++k) {
        const auto s = static_cast<std::size_t>(idx[static_cast<std::size_t>(k)]);
        xs[static_cast<std::size_t>(k)] = pts[s];
        ys[static_cast<std::size_t>(k)] = grid.samples[s].rate;
    }
    const auto c = fit_bivariate(xs, ys);
    if (!c || ((*c)[3] >= 0.0 && (*c)[4] >= 0.0)) return grid;
    const auto v = bivariate_vertex(*c, xs[0]);
    const auto a = into_simplex(v[0], v[1]);
    PhaseSearchResult out = solve_sum(ch, a[0], a[1]);
    out.method = SearchMethod::Interpolated;
    out.samples = std::move(grid.samples);
    return out;
}

LookupTable LookupTable::build(const std::vector<ChannelGains>& lattice, Objective objective, double step,
                               Exec exec) {
    std::vector<LookupEntry> entries(lattice.size());
    // Parallel across lattice points; each search runs serially.
    for_each_index(exec, lattice.size(), [&](std::size_t i) {
        const auto r = objective == Objective::IndividualR1 ? grid_search_individual(lattice[i], step, Exec::Serial)
                                                            : grid_search_sum(lattice[i], step, Exec::Serial);
        entries[i] = {lattice[i], r.best_alphas.alpha1, r.best_alphas.alpha2, r.best_rate};
    });
    return LookupTable(std::move(entries));
}

const LookupEntry& LookupTable::nearest(const ChannelGains& ch) const {
    if (entries_.empty()) throw ParameterError("empty lookup table");
    auto lg = [](double v) { return std::log(v + 1e-12); };
    auto dist = [&](const ChannelGains& a) {
        double d = 0.0;
        for (const auto& [x, y] : {std::pair{a.g12, ch.g12}, std::pair{a.g21, ch.g21}, std::pair{a.g10, ch.g10},
                                   std::pair{a.g20, ch.g20}, std::pair{a.p1, ch.p1}, std::pair{a.p2, ch.p2}})
            d += (lg(x) - lg(y)) * (lg(x) - lg(y));
        return d;
    };
    std::size_t best = 0;
    double bd = dist(entries_[0].ch);
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        const double d = dist(entries_[i].ch);
        if (d < bd) {
            bd = d;
            best = i;
        }
    }
    return entries_[best];
}

PhaseSearchResult LookupTable::lookup(const ChannelGains& ch, Objective objective, double radius) const {
    const LookupEntry& e = nearest(ch);
    std::vector<std::array<double, 2>> pts;
    for (int i = -2; i <= 2; ++i) {
        const double a1 = std::clamp(e.alpha1 + i * radius / 2.0, 0.0, kTop);
        if (objective == Objective::IndividualR1) {
            pts.push_back({a1, 0.0});
            continue;
        }
        for (int j = -2; j <= 2; ++j) pts.push_back(into_simplex(a1, e.alpha2 + j * radius / 2.0));
    }
    if (objective == Objective::IndividualR1)
        return run_grid(pts, Exec::Serial, [&](double a1, double) { return solve_individual(ch, a1); });
    return run_grid(pts, Exec::Serial, [&](double a1, double a2) { return solve_sum(ch, a1, a2); });
}

}  // namespace mactc
