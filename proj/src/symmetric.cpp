#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "mactc/errors.hpp"
#include "mactc/kkt.hpp"
#include "mactc/numerics.hpp"
#include "mactc/sum_optimizer.hpp"

namespace mactc {

namespace {

double c2(double x) { return std::log2(1.0 + x); }

// h = g12 = g21, g = g10 = g20, per-user budget p.
struct Sym {
    double h2, g2, p, al, a3;
    double A1;

    PowerAllocation mirrored(double r11, double r10, double r13) const {
        PowerAllocation pa;
        pa.rho11 = pa.rho22 = r11;
        pa.rho10 = pa.rho20 = r10;
        pa.rho13 = pa.rho23 = r13;
        return pa;
    }

    double rho11_2a(double r13) const {
        const double a3v = 4.0 * r13;
        const double b2 = (1.0 - al) * A1 + 1.0 / g2 + 2.0 * p;
        const double mu3 = 0.25 * A1 * a3v * (1.0 - 2.0 * al) + 0.5 * A1 * (2.0 * p + 1.0 / g2);
        const double disc = b2 * b2 - 4.0 * mu3;
        if (disc < 0.0) return std::numeric_limits<double>::quiet_NaN();
        return 0.5 * (b2 + std::sqrt(disc)) - 1.0 / g2;
    }

    double f2(double r13) const {
        const double r11 = rho11_2a(r13);
        if (!std::isfinite(r11)) return r11;
        const double a2 = 1.0 / g2 + r11, a3v = 4.0 * r13;
        const double b1 = (a2 - A1) * (2.0 * a2 - a3v) / (2.0 * a2 - A1);
        const double f1 = 2.0 * al * c2(g2 * r11) - 2.0 * al * c2(h2 * r11) + a3 * std::log2(g2 * (b1 + a3v));
        return (p - al * r11) / a3 - r13 - (std::exp2(f1 / a3) - 1.0) / (2.0 * g2);
    }

    std::optional<PowerAllocation> case2a() const {
        const double hi = p / a3;
        const auto r13 = num::scan_root([&](double x) { return f2(x); }, hi * 1e-12, hi, 128);
        if (!r13) return std::nullopt;
        const double r11 = rho11_2a(*r13);
        const double r10 = (p - al * r11) / a3 - *r13;
        if (!(r11 >= 0.0 && r10 >= 0.0)) return std::nullopt;
        return mirrored(r11, r10, *r13);
    }

    // rho11 making the sum constraints S1 and S4 equal with rho10 = 0.
    double rho11_tight(double r13) const {
        const double t = std::exp2(a3 / (2.0 * al) * c2(4.0 * g2 * r13));
        const double den = h2 - t * g2;
        return den > 0.0 ? (t - 1.0) / den : std::numeric_limits<double>::quiet_NaN();
    }

    std::optional<PowerAllocation> case2b() const {
        const double hi = p / a3;
        const auto r13 = num::scan_root(
            [&](double x) {
                const double r11 = rho11_tight(x);
                return std::isfinite(r11) ? p - al * r11 - a3 * x : std::numeric_limits<double>::quiet_NaN();
            },
            hi * 1e-12, hi, 128);
        if (!r13) return std::nullopt;
        const double r11 = (p - a3 * *r13) / al;
        if (!(r11 >= 0.0)) return std::nullopt;
        return mirrored(r11, 0.0, *r13);
    }

    std::optional<PowerAllocation> s4_only(const ChannelGains& ch, const PhaseDurations& pd) const {
        const double r11 = num::concave_argmax(
            [&](double r) {
                const double r13 = (p - al * r) / a3;
                return 2.0 * al * g2 / (1.0 + g2 * r) - 4.0 * al * g2 / (1.0 + 4.0 * g2 * r13);
            },
            0.0, p / al);
        const PowerAllocation pa = mirrored(r11, 0.0, std::max(0.0, (p - al * r11) / a3));
        const auto r = eval_constraints_unchecked(ch, pd, pa);
        if (r.s1 >= r.s4) return pa;
        return std::nullopt;
    }
};

}  // namespace

SumSolution maximize_sum_symmetric(const ChannelGains& ch, double alpha) {
    ch.validate();
    if (ch.g10 != ch.g20 || ch.g12 != ch.g21 || ch.p1 != ch.p2)
        throw ParameterError("symmetric solver needs g10 = g20, g12 = g21, p1 = p2");
    if (!(alpha >= 0.0 && alpha < 0.5)) throw ParameterError("symmetric solver needs alpha in [0, 0.5)");
    if (ch.g12 <= ch.g10 || alpha == 0.0 || ch.g10 == 0.0 || ch.p1 == 0.0)
        return maximize_sum_fixed_alphas(ch, alpha, alpha);

    const PhaseDurations pd = PhaseDurations::make(alpha, alpha);
    const Sym s{ch.g12 * ch.g12, ch.g10 * ch.g10, ch.p1, alpha, pd.alpha3,
                1.0 / (ch.g10 * ch.g10) - 1.0 / (ch.g12 * ch.g12)};

    std::optional<PowerAllocation> pa;
    SumCase id = SumCase::BothDf;
    bool s4_only = false;
    if ((pa = s.s4_only(ch, pd))) {
        s4_only = true;
    } else if ((pa = s.case2a())) {
        id = SumCase::BothPdf;
    } else {
        pa = s.case2b();
    }
    if (!pa) return maximize_sum_fixed_alphas(ch, alpha, alpha);

    kkt::Problem prob;
    prob.active = s4_only ? std::vector<kkt::Term>{kkt::Term::S4}
                          : std::vector<kkt::Term>{kkt::Term::S1, kkt::Term::S4};
    const double res = kkt::evaluate(ch, pd, *pa, prob).residual;
    if (res > 1e-6) {
        SumSolution out = maximize_sum_fixed_alphas(ch, alpha, alpha);
        std::ostringstream os;
        os << "symmetric case " << to_string(id) << " rejected, kkt residual " << res << "; " << out.diagnostics;
        out.diagnostics = os.str();
        return out;
    }
    SumSolution out;
    out.phases = pd;
    out.allocation = *pa;
    out.case_id = id;
    out.s4_only = s4_only;
    out.kkt_residual = res;
    out.sum_rate = eval_constraints(ch, pd, *pa).smin();
    return out;
}

}  // namespace mactc
