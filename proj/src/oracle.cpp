#include "mactc/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "mactc/errors.hpp"
#include "mactc/json_io.hpp"

namespace mactc {

std::string_view to_string(Objective o) { return o == Objective::IndividualR1 ? "IndividualR1" : "SumRate"; }

void OracleConfig::validate() const {
    if (power_grid_points < 2) throw ParameterError("oracle needs at least 2 grid points per dimension");
    if (!(alpha_step > 0.0 && alpha_step <= 0.5)) throw ParameterError("oracle alpha_step must be in (0, 0.5]");
    if (refine_rounds < 0) throw ParameterError("refine_rounds must be >= 0");
    if (refine_rounds > 0 && refine_points < 3) throw ParameterError("refine_points must be >= 3");
}

namespace {

double lg(double x) { return std::log2(1.0 + x); }

// Phase-3 budgets below this fraction of P count as empty.
constexpr double kEmptyBudget = 1e-9;

// Box in the t-domain of each free dimension; a dimension with hi == lo is fixed.
template <std::size_t D>
struct Box {
    std::array<double, D> lo{}, hi{};
    std::array<int, D> n{};

    double at(std::size_t d, int k) const {
        return n[d] == 1 ? lo[d] : lo[d] + (hi[d] - lo[d]) * k / (n[d] - 1);
    }
};

// Dimensions flagged in keep (a split of an empty budget, where every value
// ties) go back to the full range instead of zooming on an arbitrary point.
template <std::size_t D>
Box<D> zoom(const Box<D>& b, const std::array<double, D>& x, int points, const std::array<bool, D>& keep,
            int full_points) {
    Box<D> z;
    for (std::size_t d = 0; d < D; ++d) {
        if (b.n[d] == 1) {
            z.lo[d] = z.hi[d] = b.lo[d];
            z.n[d] = 1;
            continue;
        }
        if (keep[d]) {
            z.lo[d] = 0.0;
            z.hi[d] = 1.0;
            z.n[d] = full_points;
            continue;
        }
        const double h = (b.hi[d] - b.lo[d]) / (b.n[d] - 1);
        z.lo[d] = std::max(0.0, x[d] - 2.0 * h);
        z.hi[d] = std::min(1.0, x[d] + 2.0 * h);
        z.n[d] = points;
    }
    return z;
}

struct Best {
    double value = -std::numeric_limits<double>::infinity();
    std::array<double, 4> t{};
};

// First-best reduction over the outer index keeps results schedule independent.
Best reduce(const std::vector<Best>& rows) {
    Best b;
    for (const auto& r : rows)
        if (r.value > b.value) b = r;
    return b;
}

struct SumKernel {
    const ChannelGains& ch;
    PhaseDurations pd;
    double cap1, cap2;

    PowerAllocation alloc(const std::array<double, 4>& t) const {
        PowerAllocation pa;
        pa.rho11 = cap1 * t[0] * t[0];
        pa.rho22 = cap2 * t[1] * t[1];
        const double q1 = std::max(0.0, (ch.p1 - pd.alpha1 * pa.rho11) / pd.alpha3);
        const double q2 = std::max(0.0, (ch.p2 - pd.alpha2 * pa.rho22) / pd.alpha3);
        pa.rho13 = q1 * t[2] * t[2];
        pa.rho23 = q2 * t[3] * t[3];
        pa.rho10 = q1 - pa.rho13;
        pa.rho20 = q2 - pa.rho23;
        return pa;
    }

    std::array<bool, 4> empty_splits(const std::array<double, 4>& t) const {
        const double q1 = (ch.p1 - pd.alpha1 * cap1 * t[0] * t[0]) / pd.alpha3;
        const double q2 = (ch.p2 - pd.alpha2 * cap2 * t[1] * t[1]) / pd.alpha3;
        return {false, false, q1 <= kEmptyBudget * ch.p1, q2 <= kEmptyBudget * ch.p2};
    }

    Best pass(const Box<4>& b, Exec exec) const {
        const double g10s = ch.g10 * ch.g10, g20s = ch.g20 * ch.g20;
        const double g12s = ch.g12 * ch.g12, g21s = ch.g21 * ch.g21;
        const double a1 = pd.alpha1, a2 = pd.alpha2, a3 = pd.alpha3;
        std::vector<Best> rows(static_cast<std::size_t>(b.n[0]));
        for_each_index(exec, rows.size(), [&](std::size_t i) {
            Best best;
            const double u1 = b.at(0, static_cast<int>(i));
            const double r11 = cap1 * u1 * u1;
            const double i1 = a1 * lg(g12s * r11), d1 = a1 * lg(g10s * r11);
            const double q1 = std::max(0.0, (ch.p1 - a1 * r11) / a3);
            for (int j = 0; j < b.n[1]; ++j) {
                const double u2 = b.at(1, j);
                const double r22 = cap2 * u2 * u2;
                const double i2 = a2 * lg(g21s * r22), d2 = a2 * lg(g20s * r22);
                const double q2 = std::max(0.0, (ch.p2 - a2 * r22) / a3);
                const double base = g10s * q1 + g20s * q2;
                const double beam = 2.0 * ch.g10 * ch.g20 * std::sqrt(q1 * q2);
                for (int k = 0; k < b.n[2]; ++k) {
                    const double t1 = b.at(2, k);
                    const double priv1 = g10s * q1 * (1.0 - t1 * t1);
                    for (int l = 0; l < b.n[3]; ++l) {
                        const double t2 = b.at(3, l);
                        const double coop = a3 * lg(base + beam * t1 * t2);
                        const double i5 = a3 * lg(priv1 + g20s * q2 * (1.0 - t2 * t2));
                        const double v = std::min({i1 + i2 + i5, i2 + d1 + coop, i1 + d2 + coop, d1 + d2 + coop});
                        if (v > best.value) best = {v, {u1, u2, t1, t2}};
                    }
                }
            }
            rows[i] = best;
        });
        return reduce(rows);
    }
};

struct IndividualKernel {
    const ChannelGains& ch;
    double alpha1;
    double cap1;

    PhaseDurations phases() const { return PhaseDurations::make(alpha1, 0.0); }

    PowerAllocation alloc(const std::array<double, 4>& t) const {
        const double beta = 1.0 - alpha1;
        PowerAllocation pa;
        pa.rho11 = cap1 * t[0] * t[0];
        const double q1 = std::max(0.0, (ch.p1 - alpha1 * pa.rho11) / beta);
        pa.rho13 = q1 * t[2] * t[2];
        pa.rho10 = q1 - pa.rho13;
        pa.rho23 = ch.p2 / beta;
        return pa;
    }

    std::array<bool, 4> empty_splits(const std::array<double, 4>& t) const {
        const double q1 = (ch.p1 - alpha1 * cap1 * t[0] * t[0]) / (1.0 - alpha1);
        return {false, false, q1 <= kEmptyBudget * ch.p1, false};
    }

    Best pass(const Box<4>& b, Exec exec) const {
        const PhaseDurations pd = phases();
        std::vector<Best> rows(static_cast<std::size_t>(b.n[0]));
        for_each_index(exec, rows.size(), [&](std::size_t i) {
            Best best;
            for (int k = 0; k < b.n[2]; ++k) {
                const std::array<double, 4> t{b.at(0, static_cast<int>(i)), 0.0, b.at(2, k), 0.0};
                const auto r = eval_constraints_unchecked(ch, pd, alloc(t));
                const double v = std::min(r.j1, r.s4);
                if (v > best.value) best = {v, t};
            }
            rows[i] = best;
        });
        return reduce(rows);
    }
};

template <class Kernel>
std::array<double, 4> search(const Kernel& k, Box<4> box, const OracleConfig& cfg, Exec exec) {
    Best b = k.pass(box, exec);
    for (int r = 0; r < cfg.refine_rounds; ++r) {
        box = zoom(box, b.t, cfg.refine_points, k.empty_splits(b.t), cfg.power_grid_points);
        const Best z = k.pass(box, exec);
        if (z.value > b.value) b = z;
    }
    return b.t;
}

Box<4> make_box(int n, bool free0, bool free1, bool free2, bool free3) {
    Box<4> b;
    const std::array<bool, 4> f{free0, free1, free2, free3};
    for (std::size_t d = 0; d < 4; ++d) {
        b.lo[d] = 0.0;
        b.hi[d] = f[d] ? 1.0 : 0.0;
        b.n[d] = f[d] ? n : 1;
    }
    return b;
}

}  // namespace

OracleResult oracle_individual(const ChannelGains& ch, double alpha1, const OracleConfig& cfg, Exec exec) {
    ch.validate();
    cfg.validate();
    if (!(alpha1 >= 0.0 && alpha1 < 1.0)) throw ParameterError("oracle alpha1 must lie in [0, 1)");
    const IndividualKernel k{ch, alpha1, alpha1 > 0.0 ? ch.p1 / alpha1 : 0.0};
    const auto t = search(k, make_box(cfg.power_grid_points, alpha1 > 0.0, false, true, false), cfg, exec);
    OracleResult out;
    out.phases = k.phases();
    out.allocation = k.alloc(t);
    const auto r = eval_constraints(ch, out.phases, out.allocation);
    out.rate = std::min(r.j1, r.s4);
    return out;
}

OracleResult oracle_sum(const ChannelGains& ch, double alpha1, double alpha2, const OracleConfig& cfg, Exec exec) {
    ch.validate();
    cfg.validate();
    if (!(alpha1 >= 0.0 && alpha2 >= 0.0 && alpha1 + alpha2 < 1.0))
        throw ParameterError("oracle needs alpha1, alpha2 >= 0 and alpha1 + alpha2 < 1");
    const PhaseDurations pd = PhaseDurations::make(alpha1, alpha2);
    const SumKernel k{ch, pd, alpha1 > 0.0 ? ch.p1 / alpha1 : 0.0, alpha2 > 0.0 ? ch.p2 / alpha2 : 0.0};
    const auto t = search(k, make_box(cfg.power_grid_points, alpha1 > 0.0, alpha2 > 0.0, true, true), cfg, exec);
    OracleResult out;
    out.phases = pd;
    out.allocation = k.alloc(t);
    out.rate = eval_constraints(ch, pd, out.allocation).smin();
    return out;
}

OracleResult oracle_phase_search(const ChannelGains& ch, const OracleConfig& cfg, Exec exec) {
    cfg.validate();
    const double step = cfg.alpha_step;
    const int n = static_cast<int>(std::floor(1.0 / step + 1e-9));
    OracleResult best;
    best.rate = -1.0;
    for (int i = 0; i <= n; ++i) {
        const double a1 = std::min(i * step, 1.0 - 1e-6);
        if (cfg.objective == Objective::IndividualR1) {
            const auto r = oracle_individual(ch, a1, cfg, exec);
            if (r.rate > best.rate) best = r;
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            const double a2 = std::min(j * step, 1.0 - 1e-6 - a1);
            if (a2 < 0.0) continue;
            const auto r = oracle_sum(ch, a1, a2, cfg, exec);
            if (r.rate > best.rate) best = r;
        }
    }
    return best;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json golden_record(const std::string& scenario, const ChannelGains& ch, const OracleResult& r,
                             const OracleConfig& cfg) {
    nlohmann::json j;
    j["scenario"] = {{"name", scenario}, {"gains", ch}, {"phases", r.phases}};
    j["rate"] = r.rate;
    j["allocation"] = r.allocation;
    j["config"] = cfg;
    j["digest"] = fnv1a_hex(j.dump());
    return j;
}

bool verify_golden(const nlohmann::json& record) {
    if (!record.contains("digest") || !record["digest"].is_string()) return false;
    nlohmann::json body = record;
    body.erase("digest");
    return fnv1a_hex(body.dump()) == record["digest"].get<std::string>();
}

}  // namespace mactc
