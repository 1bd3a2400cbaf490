#include "mactc/sum_optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "mactc/errors.hpp"
#include "mactc/kkt.hpp"
#include "mactc/numerics.hpp"
#include "mactc/reduced_solver.hpp"
#include "sum_internal.hpp"

namespace mactc {

namespace {

constexpr std::array<std::string_view, 9> kNames{
    "ClassicalMac",        "BothPdf",            "BothDf",
    "User1PdfUser2Df",     "User1DfUser2Pdf",    "User1PdfUser2Direct",
    "User1DfUser2Direct",  "User2PdfUser1Direct", "User2DfUser1Direct"};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double c2(double x) { return std::log2(1.0 + x); }

}  // namespace

std::string_view to_string(SumCase c) { return kNames[static_cast<int>(c)]; }

std::optional<SumCase> sum_case_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == s) return static_cast<SumCase>(i);
    return std::nullopt;
}

int case_family(SumCase c) {
    switch (c) {
        case SumCase::ClassicalMac: return 1;
        case SumCase::BothPdf:
        case SumCase::BothDf:
        case SumCase::User1PdfUser2Df:
        case SumCase::User1DfUser2Pdf: return 2;
        case SumCase::User1PdfUser2Direct:
        case SumCase::User1DfUser2Direct: return 3;
        default: return 4;
    }
}

SumCase mirror(SumCase c) {
    switch (c) {
        case SumCase::User1PdfUser2Df: return SumCase::User1DfUser2Pdf;
        case SumCase::User1DfUser2Pdf: return SumCase::User1PdfUser2Df;
        case SumCase::User1PdfUser2Direct: return SumCase::User2PdfUser1Direct;
        case SumCase::User1DfUser2Direct: return SumCase::User2DfUser1Direct;
        case SumCase::User2PdfUser1Direct: return SumCase::User1PdfUser2Direct;
        case SumCase::User2DfUser1Direct: return SumCase::User1DfUser2Direct;
        default: return c;
    }
}

namespace detail {

SumModel::SumModel(const ChannelGains& c, double a1, double a2)
    : ch(c), pd(PhaseDurations::make(a1, a2)),
      g10s(c.g10 * c.g10), g20s(c.g20 * c.g20), g12s(c.g12 * c.g12), g21s(c.g21 * c.g21),
      A1(1.0 / g10s - 1.0 / g12s), A2(1.0 / g20s - 1.0 / g21s) {}

RateConstraints SumModel::rates(const PowerAllocation& pa) const {
    return eval_constraints_unchecked(ch, pd, pa);
}

double SumModel::f1(double r11, double r22) const {
    double v = pd.alpha1 * (c2(g12s * r11) - c2(g10s * r11));
    if (pd.alpha2 > 0.0) v += pd.alpha2 * (c2(g21s * r22) - c2(g20s * r22));
    return v / pd.alpha3;
}

double SumModel::q1(double r11) const { return (ch.p1 - pd.alpha1 * r11) / pd.alpha3; }
double SumModel::q2(double r22) const { return (ch.p2 - pd.alpha2 * r22) / pd.alpha3; }

// ---- both users cooperate, private powers positive

std::optional<SumModel::Inner2a> SumModel::inner2a(double e, double r11) const {
    const double a3 = 1.0 / g10s + r11;
    const double b3 = (2.0 * a3 - A1) / (a3 - A1);
    const double g = 2.0 * g10s * a3 - b3 * e;
    const double b1 = 2.0 * g20s * A2 + 2.0 * g10s * a3 + e * (2.0 - b3);
    const double b5 = A2 * (e + 2.0 * g10s * a3 - b3 * e);
    const auto a4 = num::larger_root(2.0 * g20s, b1, b5);
    if (!a4) return std::nullopt;
    return Inner2a{g, *a4 - 1.0 / g20s};
}

double SumModel::f3(double e, double r11) const {
    const auto in = inner2a(e, r11);
    if (!in) return kNaN;
    return 0.5 * in->g + e - 1.0 -
           (g10s * ch.p1 + g20s * ch.p2 - pd.alpha1 * g10s * r11 - pd.alpha2 * g20s * in->r22) / pd.alpha3;
}

std::optional<double> SumModel::rho11_for(double e) const {
    const double hi = ch.p1 / pd.alpha1;
    return num::scan_root([&](double r) { return f3(e, r); }, hi * 1e-12, hi, 96);
}

double SumModel::f2(double e) const {
    const auto r11 = rho11_for(e);
    if (!r11) return kNaN;
    const auto in = inner2a(e, *r11);
    return in->g - (std::exp2(f1(*r11, in->r22)) - 1.0) * e;
}

std::optional<PowerAllocation> SumModel::case2a() const {
    const double hi = 1.0 + (g10s * ch.p1 + g20s * ch.p2) / pd.alpha3;
    const auto e = num::scan_root([&](double x) { return f2(x); }, 1.0 + 1e-12 * hi, hi, 96);
    if (!e) return std::nullopt;
    const auto r11 = rho11_for(*e);
    if (!r11) return std::nullopt;
    const auto in = inner2a(*e, *r11);
    PowerAllocation pa;
    pa.rho11 = *r11;
    pa.rho22 = in->r22;
    pa.rho13 = in->g / (4.0 * g10s);
    pa.rho23 = in->g / (4.0 * g20s);
    pa.rho10 = q1(pa.rho11) - pa.rho13;
    pa.rho20 = q2(pa.rho22) - pa.rho23;
    for (double v : pa.as_array())
        if (!(v >= 0.0)) return std::nullopt;
    return pa;
}

// ---- both users cooperate, private powers zero

PowerAllocation SumModel::alloc2b(double r13, double r23) const {
    PowerAllocation pa;
    pa.rho13 = r13;
    pa.rho23 = r23;
    pa.rho11 = (ch.p1 - pd.alpha3 * r13) / pd.alpha1;
    pa.rho22 = (ch.p2 - pd.alpha3 * r23) / pd.alpha2;
    return pa;
}

double SumModel::f4(double r13, double r23) const {
    const PowerAllocation pa = alloc2b(r13, r23);
    const double a3 = 1.0 / g10s + pa.rho11, a4 = 1.0 / g20s + pa.rho22;
    const double amp = ch.g10 * std::sqrt(r13) + ch.g20 * std::sqrt(r23);
    return (1.0 + amp * amp) * (A1 / a3 - A2 / a4) +
           ch.g10 * (ch.g10 + ch.g20 * std::sqrt(r23 / r13)) * (a3 - A1) -
           ch.g20 * (ch.g20 + ch.g10 * std::sqrt(r13 / r23)) * (a4 - A2);
}

std::optional<double> SumModel::rho23_for(double r13) const {
    const double hi = ch.p2 / pd.alpha3;
    return num::scan_root([&](double r23) { return f4(r13, r23); }, hi * 1e-12, hi, 96);
}

double SumModel::f5(double r13) const {
    const auto r23 = rho23_for(r13);
    if (!r23) return kNaN;
    const PowerAllocation pa = alloc2b(r13, *r23);
    const double t = std::exp2(f1(pa.rho11, pa.rho22)) - 1.0;
    const double root = std::sqrt(std::max(0.0, t)) - ch.g20 * std::sqrt(*r23);
    return r13 - root * root / g10s;
}

std::optional<PowerAllocation> SumModel::case2b() const {
    const double hi = ch.p1 / pd.alpha3;
    const auto r13 = num::scan_root([&](double x) { return f5(x); }, hi * 1e-12, hi, 96);
    if (!r13) return std::nullopt;
    const auto r23 = rho23_for(*r13);
    if (!r23) return std::nullopt;
    const PowerAllocation pa = alloc2b(*r13, *r23);
    for (double v : pa.as_array())
        if (!(v >= 0.0)) return std::nullopt;
    return pa;
}

// ---- S4 maximized with both private powers zero

double SumModel::ds4_user(double alpha, double gs, double own, double q_own, double g_own,
                          double amp) const {
    if (q_own <= 0.0) return -std::numeric_limits<double>::infinity();
    return alpha * gs / (1.0 + gs * own) - alpha * amp * g_own / (std::sqrt(q_own) * (1.0 + amp * amp));
}

PowerAllocation SumModel::s4_peak() const {
    auto amp_of = [&](double r11, double r22) {
        return ch.g10 * std::sqrt(std::max(0.0, q1(r11))) + ch.g20 * std::sqrt(std::max(0.0, q2(r22)));
    };
    auto best22 = [&](double r11) {
        if (pd.alpha2 <= 0.0) return 0.0;
        return num::concave_argmax(
            [&](double r22) { return ds4_user(pd.alpha2, g20s, r22, q2(r22), ch.g20, amp_of(r11, r22)); },
            0.0, ch.p2 / pd.alpha2);
    };
    const double r11 = num::concave_argmax(
        [&](double r) {
            const double r22 = best22(r);
            return ds4_user(pd.alpha1, g10s, r, q1(r), ch.g10, amp_of(r, r22));
        },
        0.0, ch.p1 / pd.alpha1);
    PowerAllocation pa;
    pa.rho11 = r11;
    pa.rho22 = best22(r11);
    pa.rho13 = std::max(0.0, q1(pa.rho11));
    pa.rho23 = std::max(0.0, q2(pa.rho22));
    return pa;
}

std::optional<PowerAllocation> SumModel::s4_only() const {
    const PowerAllocation pa = s4_peak();
    const auto r = rates(pa);
    if (std::min({r.s1, r.s2, r.s3}) >= r.s4) return pa;
    return std::nullopt;
}

// ---- user 1 cooperates, alpha2 = 0

std::optional<PowerAllocation> SumModel::alloc3a(double r10) const {
    const double a3_ = pd.alpha3, a1 = pd.alpha1;
    const double a8 = 2.0 * g10s / a3_;
    const double a11 = (1.0 + g10s * ch.p1 + g20s * ch.p2) / a3_;
    const double b2 = (2.0 + a1) / a3_ * g10s * A1 + 2.0 * a11;
    const double a9 = 1.0 + g10s * r10 + g20s * ch.p2 / a3_;
    const double a10 = (g10s * ch.p1 + a1) / a3_ - g10s * r10;
    const double b4 = A1 * (a9 + 3.0 * a10);
    const auto a3 = num::larger_root(a8, b2, b4);
    if (!a3) return std::nullopt;
    PowerAllocation pa;
    pa.rho11 = *a3 - 1.0 / g10s;
    pa.rho10 = r10;
    pa.rho13 = q1(pa.rho11) - r10;
    pa.rho23 = g10s / g20s * pa.rho13;
    pa.rho20 = ch.p2 / a3_ - pa.rho23;
    return pa;
}

double SumModel::f7(double r10) const {
    const auto pa = alloc3a(r10);
    if (!pa) return kNaN;
    const double a3 = 1.0 / g10s + pa->rho11;
    const double e = 1.0 + g10s * r10 + g20s * pa->rho20;
    const double b3 = (2.0 * a3 - A1) / (a3 - A1);
    return 2.0 * g10s * a3 - b3 * e - e * (std::exp2(f1(pa->rho11, 0.0)) - 1.0);
}

std::optional<PowerAllocation> SumModel::case3a() const {
    const auto r10 = num::scan_root([&](double x) { return f7(x); }, 0.0, ch.p1 / pd.alpha3, 128);
    if (!r10) return std::nullopt;
    const auto pa = alloc3a(*r10);
    if (!pa) return std::nullopt;
    for (double v : pa->as_array())
        if (!(v >= 0.0)) return std::nullopt;
    return pa;
}

double SumModel::b10(double r11, double r13, double r23) const {
    const double a5 = r11 + 1.0 / g12s;
    const double a3 = a5 + A1;
    const double amp = ch.g10 * std::sqrt(r13) + ch.g20 * std::sqrt(r23);
    return (a3 * ch.g10 * (ch.g10 + ch.g20 * std::sqrt(r23 / r13)) - amp * amp) /
           (1.0 + a3 / a5 * ch.g10 / ch.g20 * std::sqrt(r13 / r23));
}

std::optional<double> SumModel::rho23_for_3b(double r13) const {
    const double r11 = (ch.p1 - pd.alpha3 * r13) / pd.alpha1;
    const double cap = ch.p2 / pd.alpha3;
    return num::scan_root(
        [&](double r23) { return 1.0 + g20s * (cap - r23) - b10(r11, r13, r23); }, cap * 1e-12, cap, 96);
}

double SumModel::f8(double r13) const {
    const auto r23 = rho23_for_3b(r13);
    if (!r23) return kNaN;
    const double r11 = (ch.p1 - pd.alpha3 * r13) / pd.alpha1;
    const double amp = ch.g10 * std::sqrt(r13) + ch.g20 * std::sqrt(*r23);
    return b10(r11, r13, *r23) - amp * amp / (std::exp2(f1(r11, 0.0)) - 1.0);
}

std::optional<PowerAllocation> SumModel::case3b() const {
    double hi = ch.p1 / pd.alpha3;
    // Past the point where rho23 reaches P2/alpha3 the inner root is gone; keep the scan inside.
    const double cap = ch.p2 / pd.alpha3;
    const auto edge = [&](double r13) { return 1.0 - b10((ch.p1 - pd.alpha3 * r13) / pd.alpha1, r13, cap); };
    if (edge(hi) > 0.0)
        if (const auto e = num::scan_root(edge, hi * 1e-12, hi, 96)) hi = *e;
    const auto r13 = num::scan_root([&](double x) { return f8(x); }, hi * 1e-12, hi, 96);
    if (!r13) return std::nullopt;
    const auto r23 = rho23_for_3b(*r13);
    if (!r23) return std::nullopt;
    PowerAllocation pa;
    pa.rho13 = *r13;
    pa.rho23 = *r23;
    pa.rho11 = (ch.p1 - pd.alpha3 * *r13) / pd.alpha1;
    pa.rho20 = ch.p2 / pd.alpha3 - *r23;
    for (double v : pa.as_array())
        if (!(v >= 0.0)) return std::nullopt;
    return pa;
}

double SumModel::kkt(const PowerAllocation& pa, const std::vector<kkt::Term>& active) const {
    kkt::Problem p;
    p.active = active;
    return kkt::evaluate(ch, pd, pa, p).residual;
}

}  // namespace detail

namespace {

using detail::SumModel;
constexpr double kKktTol = 1e-6;

struct Pick {
    PowerAllocation pa;
    SumCase id;
    bool s4_only;
};

SumSolution classical(const ChannelGains& ch) {
    SumSolution sol;
    sol.phases = PhaseDurations::make(0.0, 0.0);
    sol.allocation.rho10 = ch.p1;
    sol.allocation.rho20 = ch.p2;
    sol.case_id = SumCase::ClassicalMac;
    sol.sum_rate = eval_constraints(ch, sol.phases, sol.allocation).smin();
    return sol;
}

SumCase classify(int family, const PowerAllocation& pa, double tol) {
    const bool p1 = pa.rho10 > tol, p2 = pa.rho20 > tol;
    if (family == 3) return p1 ? SumCase::User1PdfUser2Direct : SumCase::User1DfUser2Direct;
    if (p1 && p2) return SumCase::BothPdf;
    if (!p1 && !p2) return SumCase::BothDf;
    return p1 ? SumCase::User1PdfUser2Df : SumCase::User1DfUser2Pdf;
}

bool closed_forms_defined(const ChannelGains& ch) {
    return ch.g10 > 0.0 && ch.g20 > 0.0 && ch.p1 > 0.0 && ch.p2 > 0.0;
}

// Validates the closed-form pick and falls back to the reduced solve.
SumSolution finish(const SumModel& m, int family, std::optional<Pick> pick, std::ostringstream& diag) {
    SumSolution sol;
    sol.phases = m.pd;
    if (pick) {
        std::vector<kkt::Term> active{kkt::Term::S4};
        if (!pick->s4_only) active.insert(active.begin(), kkt::Term::S1);
        const double res = m.kkt(pick->pa, active);
        if (res <= kKktTol) {
            sol.allocation = pick->pa;
            sol.case_id = pick->id;
            sol.s4_only = pick->s4_only;
            sol.kkt_residual = res;
        } else {
            diag << "case " << to_string(pick->id) << " rejected, kkt residual " << res << "; ";
            pick.reset();
        }
    } else {
        diag << "no closed-form case matched; ";
    }
    if (!pick) {
        const auto red = reduced::sum(m.ch, m.pd);
        const auto r = m.rates(red.allocation);
        const double tol = 1e-7 * std::max({1.0, m.ch.p1 / m.pd.alpha3, m.ch.p2 / m.pd.alpha3});
        sol.allocation = red.allocation;
        sol.case_id = classify(family, red.allocation, tol);
        sol.s4_only = r.s1 - r.s4 > 1e-7 * std::max(1.0, r.s4);
        const double lo = r.smin();
        std::vector<kkt::Term> active;
        const std::array<std::pair<kkt::Term, double>, 4> terms{
            {{kkt::Term::S1, r.s1}, {kkt::Term::S2, r.s2}, {kkt::Term::S3, r.s3}, {kkt::Term::S4, r.s4}}};
        for (const auto& [t, v] : terms)
            if (v - lo <= 1e-7 * std::max(1.0, lo)) active.push_back(t);
        sol.kkt_residual = m.kkt(red.allocation, active);
        sol.fallback = true;
        diag << "reduced concave solve used";
    }
    sol.diagnostics = diag.str();
    sol.sum_rate = eval_constraints(m.ch, sol.phases, sol.allocation).smin();
    return sol;
}

SumSolution solve_family3(const ChannelGains& ch, double alpha1) {
    const SumModel m(ch, alpha1, 0.0);
    std::ostringstream diag;
    std::optional<Pick> pick;
    if (closed_forms_defined(ch)) {
        if (auto pa = m.s4_only())
            pick = Pick{*pa, SumCase::User1DfUser2Direct, true};
        else if (auto pa = m.case3a())
            pick = Pick{*pa, SumCase::User1PdfUser2Direct, false};
        else if (auto pa = m.case3b())
            pick = Pick{*pa, SumCase::User1DfUser2Direct, false};
    }
    return finish(m, 3, pick, diag);
}

SumSolution solve_family2(const ChannelGains& ch, double alpha1, double alpha2) {
    const SumModel m(ch, alpha1, alpha2);
    std::ostringstream diag;
    std::optional<Pick> pick;
    if (closed_forms_defined(ch)) {
        if (auto pa = m.s4_only())
            pick = Pick{*pa, SumCase::BothDf, true};
        else if (auto pa = m.case2a())
            pick = Pick{*pa, SumCase::BothPdf, false};
        else if (auto pa = m.case2b())
            pick = Pick{*pa, SumCase::BothDf, false};
    }
    return finish(m, 2, pick, diag);
}

SumSolution swap_solution(SumSolution s) {
    s.phases = s.phases.swapped();
    s.allocation = s.allocation.swapped();
    s.case_id = mirror(s.case_id);
    return s;
}

}  // namespace

SumSolution maximize_sum_fixed_alphas(const ChannelGains& ch, double alpha1, double alpha2) {
    ch.validate();
    if (!(alpha1 >= 0.0 && alpha2 >= 0.0 && alpha1 + alpha2 < 1.0))
        throw ParameterError("need alpha1, alpha2 >= 0 and alpha1 + alpha2 < 1");

    const bool up1 = ch.g12 > ch.g10, up2 = ch.g21 > ch.g20;
    // A zero broadcast phase removes that user's relaying option, so the
    // problem is the one-sided family or the classical MAC.
    const bool use1 = up1 && alpha1 > 0.0, use2 = up2 && alpha2 > 0.0;
    if (use1 && use2) return solve_family2(ch, alpha1, alpha2);
    if (use1) return solve_family3(ch, alpha1);
    if (use2) return swap_solution(solve_family3(ch.swapped(), alpha2));
    return classical(ch);
}

Table2Definitions table2_definitions(const ChannelGains& ch, double alpha1, double alpha2,
                                     const PowerAllocation& partial) {
    if (ch.g10 == 0.0 || ch.g20 == 0.0 || ch.g12 == 0.0 || ch.g21 == 0.0)
        throw SingularChannel("table definitions need all gains > 0");
    if (!(alpha1 > 0.0 && alpha1 < 1.0 && alpha2 >= 0.0 && alpha1 + alpha2 < 1.0))
        throw ParameterError("need alpha1 in (0, 1), alpha2 >= 0, alpha1 + alpha2 < 1");
    auto m = std::make_shared<SumModel>(ch, alpha1, alpha2);
    const double g10s = m->g10s, g20s = m->g20s;
    const double a3_ = m->pd.alpha3;

    Table2Definitions d;
    d.a1 = m->A1;
    d.a2 = m->A2;
    d.a3 = 1.0 / g10s + partial.rho11;
    d.a4 = 1.0 / g20s + partial.rho22;
    d.a5 = partial.rho11 + 1.0 / m->g12s;
    d.a6 = 1.0 + g10s * partial.rho10 + g20s * partial.rho20;
    d.a7 = 2.0 * g20s;
    d.a8 = 2.0 * g10s / (1.0 - alpha1);
    d.a9 = 1.0 + g10s * partial.rho10 + g20s * ch.p2 / (1.0 - alpha1);
    d.a10 = (g10s * ch.p1 + alpha1) / (1.0 - alpha1) - g10s * partial.rho10;
    d.a11 = (1.0 + g10s * ch.p1 + g20s * ch.p2) / (1.0 - alpha1);
    d.b3 = (2.0 * d.a3 - d.a1) / (d.a3 - d.a1);
    d.b1 = 2.0 * g20s * d.a2 + 2.0 * g10s * d.a3 + d.a6 * (2.0 - d.b3);
    d.b2 = (2.0 + alpha1) / (1.0 - alpha1) * g10s * d.a1 + 2.0 * d.a11;
    d.b4 = d.a1 * (d.a9 + 3.0 * d.a10);
    d.b5 = d.a2 * (d.a6 + 2.0 * g10s * d.a3 - d.b3 * d.a6);
    d.b8 = d.b2 + g10s * partial.rho13 - g10s * (d.a5 + d.a1);
    d.b9 = ch.g10 / ch.g20 * (d.a5 + d.a1) / d.a5 * std::sqrt(partial.rho13);
    d.b10 = m->b10(partial.rho11, partial.rho13, partial.rho23);
    d.f1 = m->f1(partial.rho11, partial.rho22);
    d.f6 = alpha1 / a3_ * (c2(m->g12s * partial.rho11) - c2(g10s * partial.rho11));

    const double a6 = d.a6, r13 = partial.rho13;
    d.f2 = [m](double e) { return m->f2(e); };
    d.f3 = [m, a6](double r11) { return m->f3(a6, r11); };
    d.f4 = [m, r13](double r23) { return m->f4(r13, r23); };
    d.f5 = [m](double x) { return m->f5(x); };
    auto m3 = std::make_shared<SumModel>(ch, alpha1, 0.0);
    d.f7 = [m3](double r10) { return m3->f7(r10); };
    d.f8 = [m3](double x) { return m3->f8(x); };
    return d;
}

AugmentedResult augmented_optimum(const ChannelGains& ch, double alpha1, double alpha2) {
    const PhaseDurations pd = PhaseDurations::make(alpha1, alpha2);
    if (!(alpha1 > 0.0 && alpha2 > 0.0)) throw ParameterError("augmented scheme needs alpha1, alpha2 > 0");
    const double cap1 = ch.p1 / alpha1, cap2 = ch.p2 / alpha2;
    auto value = [&](double d1, double d2) { return reduced::sum_augmented(ch, pd, d1, d2).value; };

    constexpr int n = 7;
    double best = -1.0;
    int bi = 0, bj = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double v = value(cap1 * i / (n - 1), cap2 * j / (n - 1));
            if (v > best) {
                best = v;
                bi = i;
                bj = j;
            }
        }
    double d1 = cap1 * bi / (n - 1), d2 = cap2 * bj / (n - 1);
    const double h1 = cap1 / (n - 1), h2 = cap2 / (n - 1);
    for (int round = 0; round < 2; ++round) {
        d1 = num::golden_max([&](double x) { return value(x, d2); }, std::max(0.0, d1 - h1),
                             std::min(cap1, d1 + h1), 30).x;
        d2 = num::golden_max([&](double x) { return value(d1, x); }, std::max(0.0, d2 - h2),
                             std::min(cap2, d2 + h2), 30).x;
    }
    // With S4 alone binding the optimum is flat in the dagger powers; report the smallest maximizer.
    const double top = value(d1, d2);
    if (value(0.0, d2) >= top - 1e-12) d1 = 0.0;
    if (value(d1, 0.0) >= top - 1e-12) d2 = 0.0;
    AugmentedResult out;
    out.dag1 = d1;
    out.dag2 = d2;
    out.rate_augmented = value(d1, d2);
    out.rate_main = maximize_sum_fixed_alphas(ch, alpha1, alpha2).sum_rate;
    return out;
}

}  // namespace mactc
