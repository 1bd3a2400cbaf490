#include "mactc/rate_region.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mactc/errors.hpp"
#include "mactc/individual_optimizer.hpp"
#include "mactc/sum_optimizer.hpp"

namespace mactc {

bool RateRegion::contains(RatePoint p, double tol) const {
    return p.r1 >= -tol && p.r2 >= -tol && p.r1 <= j1 + tol && p.r2 <= j2 + tol && p.r1 + p.r2 <= smin + tol;
}

RateRegion region_from_constraints(double j1, double j2, double smin) {
    if (!(j1 >= 0.0 && j2 >= 0.0 && smin >= 0.0)) throw ParameterError("region constraints must be >= 0");
    RateRegion r{j1, j2, smin, {}};
    const double x = std::min(j1, smin), y = std::min(j2, smin);
    std::vector<RatePoint> c{{0.0, 0.0}, {x, 0.0}};
    if (smin < x + y) {
        c.push_back({x, smin - x});
        c.push_back({smin - y, y});
    } else {
        c.push_back({x, y});
    }
    c.push_back({0.0, y});
    for (const auto& p : c)
        if (r.corners.empty() || !(p == r.corners.back())) r.corners.push_back(p);
    while (r.corners.size() > 1 && r.corners.back() == r.corners.front()) r.corners.pop_back();
    return r;
}

RateRegion region_for_allocation(const ChannelGains& ch, const PhaseDurations& pd, const PowerAllocation& pa) {
    const auto rc = eval_constraints(ch, pd, pa);
    return region_from_constraints(rc.j1, rc.j2, rc.smin());
}

RateRegion classical_mac_region(const ChannelGains& ch) {
    ch.validate();
    const double a = ch.g10 * ch.g10 * ch.p1, b = ch.g20 * ch.g20 * ch.p2;
    return region_from_constraints(capacity(a), capacity(b), capacity(a + b));
}

ChannelGains outer_bound_gains(const ChannelGains& ch) {
    ChannelGains out = ch;
    out.g12 = std::sqrt(ch.g10 * ch.g10 + ch.g12 * ch.g12);
    out.g21 = std::sqrt(ch.g20 * ch.g20 + ch.g21 * ch.g21);
    return out;
}

namespace {

double cross(RatePoint o, RatePoint a, RatePoint b) {
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

std::vector<PhaseDurations> phase_cells(double step) {
    if (!(step > 0.0 && step < 1.0)) throw ParameterError("alpha grid step must be in (0, 1)");
    const int n = static_cast<int>(std::floor(1.0 / step + 1e-9));
    std::vector<PhaseDurations> cells;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            const double a1 = i * step, a2 = std::min(j * step, 1.0 - a1);
            if (1.0 - a1 - a2 <= 1e-12) continue;
            cells.push_back(PhaseDurations::make(a1, a2));
        }
    return cells;
}

// Optimizer allocations for a cell: sum optimum, and the individual optimum
// of a user on the cells where the partner's phase is empty.
void add_seeds(const ChannelGains& ch, const PhaseDurations& pd, std::vector<std::pair<PhaseDurations, PowerAllocation>>& out) {
    try {
        const auto s = maximize_sum_fixed_alphas(ch, pd.alpha1, pd.alpha2);
        out.emplace_back(s.phases, s.allocation);
        if (pd.alpha2 == 0.0) {
            const auto r = maximize_individual_fixed_alpha(ch, pd.alpha1);
            out.emplace_back(r.phases(), r.allocation);
        }
        if (pd.alpha1 == 0.0) {
            const auto r = maximize_individual_fixed_alpha(ch.swapped(), pd.alpha2);
            out.emplace_back(r.phases().swapped(), r.allocation.swapped());
        }
    } catch (const NumericalFailure&) {
        // the grid still covers the cell
    }
}

void add_vertices(const ChannelGains& ch, const PhaseDurations& pd, const PowerAllocation& pa,
                  std::vector<RatePoint>& pts) {
    const auto rc = eval_constraints_unchecked(ch, pd, pa);
    const auto reg = region_from_constraints(std::max(0.0, rc.j1), std::max(0.0, rc.j2), std::max(0.0, rc.smin()));
    for (const auto& p : reg.corners)
        if (p.r1 > 0.0 || p.r2 > 0.0) pts.push_back(p);
}

std::vector<RatePoint> cell_points(const ChannelGains& eval_ch, const std::vector<ChannelGains>& seed_chs,
                                   const PhaseDurations& pd, int n) {
    const ChannelGains& ch = eval_ch;
    std::vector<RatePoint> pts;
    auto axis = [n](double cap, bool used) {
        std::vector<double> v;
        if (!used || cap <= 0.0) return std::vector<double>{0.0};
        for (int k = 0; k < n; ++k) {
            const double t = static_cast<double>(k) / (n - 1);
            v.push_back(cap * t * t);
        }
        return v;
    };
    const auto r11s = axis(pd.alpha1 > 0.0 ? ch.p1 / pd.alpha1 : 0.0, pd.alpha1 > 0.0);
    const auto r22s = axis(pd.alpha2 > 0.0 ? ch.p2 / pd.alpha2 : 0.0, pd.alpha2 > 0.0);
    for (double r11 : r11s)
        for (double r22 : r22s) {
            const double q1 = std::max(0.0, (ch.p1 - pd.alpha1 * r11) / pd.alpha3);
            const double q2 = std::max(0.0, (ch.p2 - pd.alpha2 * r22) / pd.alpha3);
            for (double c1 : axis(q1, true))
                for (double c2 : axis(q2, true)) {
                    PowerAllocation pa{r11, r22, q1 - c1, q2 - c2, c1, c2};
                    add_vertices(ch, pd, pa, pts);
                }
        }
    std::vector<std::pair<PhaseDurations, PowerAllocation>> seeds;
    for (const auto& s : seed_chs) add_seeds(s, pd, seeds);
    for (const auto& [spd, pa] : seeds) add_vertices(ch, spd, pa, pts);
    return pareto_hull(std::move(pts));
}

std::vector<RatePoint> sweep(const ChannelGains& eval_ch, const std::vector<ChannelGains>& seed_chs,
                             double step, int n, Exec exec) {
    eval_ch.validate();
    if (n < 2) throw ParameterError("power grid needs at least 2 points");
    const auto cells = phase_cells(step);
    std::vector<std::vector<RatePoint>> per(cells.size());
    for_each_index(exec, cells.size(), [&](std::size_t i) { per[i] = cell_points(eval_ch, seed_chs, cells[i], n); });
    std::vector<RatePoint> all;
    for (const auto& v : per) all.insert(all.end(), v.begin(), v.end());
    return pareto_hull(std::move(all));
}

}  // namespace

std::vector<RatePoint> pareto_hull(std::vector<RatePoint> pts) {
    pts.push_back({0.0, 0.0});
    std::sort(pts.begin(), pts.end(), [](RatePoint a, RatePoint b) {
        return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 < b.r2);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    // Upper hull, left to right.
    std::vector<RatePoint> up;
    for (const auto& p : pts) {
        while (up.size() >= 2 && cross(up[up.size() - 2], up.back(), p) >= 0.0) up.pop_back();
        up.push_back(p);
    }
    // Keep the part from the highest point to the rightmost one.
    std::size_t top = 0;
    for (std::size_t i = 1; i < up.size(); ++i)
        if (up[i].r2 >= up[top].r2) top = i;
    return {up.begin() + static_cast<long>(top), up.end()};
}

bool frontier_contains(const std::vector<RatePoint>& f, RatePoint p, double tol) {
    if (f.empty()) return p.r1 <= tol && p.r2 <= tol;
    if (p.r1 > f.back().r1 + tol || p.r2 > f.front().r2 + tol) return false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        const RatePoint a = f[i], b = f[i + 1];
        const double len = std::hypot(b.r1 - a.r1, b.r2 - a.r2);
        if (cross(a, b, p) > tol * len) return false;
    }
    return true;
}

double max_sum_rate(const std::vector<RatePoint>& f) {
    double best = 0.0;
    for (const auto& p : f) best = std::max(best, p.r1 + p.r2);
    return best;
}

std::vector<RatePoint> envelope_region(const ChannelGains& ch, double step, int n, Exec exec) {
    return sweep(ch, {ch}, step, n, exec);
}

std::vector<RatePoint> outer_bound_region(const ChannelGains& ch, double step, int n, Exec exec) {
    const ChannelGains ob = outer_bound_gains(ch);
    return sweep(ob, {ch, ob}, step, n, exec);
}

std::string frontier_csv(const std::vector<RatePoint>& f) {
    std::string out = "r1,r2\n";
    char buf[64];
    for (const auto& p : f) {
        std::snprintf(buf, sizeof buf, "%.6f,%.6f\n", p.r1, p.r2);
        out += buf;
    }
    return out;
}

}  // namespace mactc
