#include "mactc/individual_optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "mactc/errors.hpp"
#include "mactc/kkt.hpp"
#include "mactc/numerics.hpp"
#include "mactc/reduced_solver.hpp"

namespace mactc {

namespace {

constexpr double kKktTol = 1e-6;
constexpr int kScan = 128;

constexpr std::array<std::string_view, 5> kNames{"Direct", "PdfRepetition", "DecodeForward",
                                                 "PdfNoRepetition", "TwoHop"};

double c2(double x) { return std::log2(1.0 + x); }

// Fixed-alpha problem data shared by the case solvers.
struct Setup {
    const ChannelGains& ch;
    double alpha;
    double beta;
    double rho23;
    double g10s, g12s, g20s;

    Setup(const ChannelGains& c, double a)
        : ch(c), alpha(a), beta(1.0 - a), rho23(c.p2 / (1.0 - a)),
          g10s(c.g10 * c.g10), g12s(c.g12 * c.g12), g20s(c.g20 * c.g20) {}

    PhaseDurations phases() const { return PhaseDurations::make(alpha, 0.0); }

    PowerAllocation alloc(double r11, double r10, double r13) const {
        PowerAllocation pa;
        pa.rho11 = r11;
        pa.rho10 = r10;
        pa.rho13 = r13;
        pa.rho23 = rho23;
        return pa;
    }

    RateConstraints rates(const PowerAllocation& pa) const {
        return eval_constraints_unchecked(ch, phases(), pa);
    }

    double kkt(const PowerAllocation& pa, std::vector<kkt::Term> active) const {
        kkt::Problem p;
        p.active = std::move(active);
        p.decision = {true, false, true, false, true, false};
        p.budget = {true, false};
        return kkt::evaluate(ch, phases(), pa, p).residual;
    }
};

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

struct Candidate {
    PowerAllocation pa;
    IndividualCase id;
    std::vector<kkt::Term> active;
    bool relay_limited = false;
};

std::optional<Candidate> try_case3(const Setup& s) {
    const double a1 = 1.0 / s.g10s - 1.0 / s.g12s;
    double r11 = s.ch.p1 + s.beta * a1;
    double r10 = s.ch.p1 - s.alpha * a1;
    IndividualCase id = IndividualCase::PdfNoRepetition;
    if (r10 <= 0.0) {
        r10 = 0.0;
        r11 = s.ch.p1 / s.alpha;
        id = IndividualCase::TwoHop;
    }
    const PowerAllocation pa = s.alloc(r11, r10, 0.0);
    const auto r = s.rates(pa);
    if (!(r.s4 > r.j1)) return std::nullopt;
    return Candidate{pa, id, {kkt::Term::J1}};
}

// S4 maximized with rho10 = 0 while J1 stays slack.
std::optional<Candidate> try_relay_limited(const Setup& s) {
    const double hi = s.ch.p1 / s.alpha;
    auto r13_of = [&](double r11) { return std::max(0.0, (s.ch.p1 - s.alpha * r11) / s.beta); };
    auto ds4 = [&](double r11) {
        const double r13 = r13_of(r11);
        if (r13 <= 0.0) return -std::numeric_limits<double>::infinity();
        const double amp = s.ch.g10 * std::sqrt(r13) + s.ch.g20 * std::sqrt(s.rho23);
        return s.alpha * s.g10s / (1.0 + s.g10s * r11) -
               s.alpha * amp * s.ch.g10 / (std::sqrt(r13) * (1.0 + amp * amp));
    };
    const double r11 = num::concave_argmax(ds4, 0.0, hi);
    const PowerAllocation pa = s.alloc(r11, 0.0, r13_of(r11));
    const auto r = s.rates(pa);
    if (!(r.j1 >= r.s4)) return std::nullopt;
    return Candidate{pa, IndividualCase::DecodeForward, {kkt::Term::S4}, true};
}

std::optional<Candidate> try_case2a(const Setup& s, const Table1Definitions& d) {
    const double hi = s.ch.p1 / s.beta;
    const auto root = num::scan_root(d.f2, hi * 1e-12, hi, kScan);
    if (!root) return std::nullopt;
    const double r13 = *root;
    const double r11 = d.rho11_of_rho13(r13);
    const double r10 = (s.ch.p1 - s.alpha * r11) / s.beta - r13;
    if (!(r11 >= 0.0) || !(r10 >= 0.0)) return std::nullopt;
    const PowerAllocation pa = s.alloc(r11, r10, r13);
    const auto r = s.rates(pa);
    if (rel_gap(r.j1, r.s4) > kKktTol) return std::nullopt;
    return Candidate{pa, IndividualCase::PdfRepetition, {kkt::Term::J1, kkt::Term::S4}};
}

std::optional<Candidate> try_case2b(const Setup& s, const Table1Definitions& d) {
    const double hi = s.ch.p1 / s.beta;
    const auto root = num::scan_root(d.f4, 0.0, hi, kScan);
    if (!root) return std::nullopt;
    const double r13 = *root;
    const double r11 = (s.ch.p1 - s.beta * r13) / s.alpha;
    if (!(r11 >= 0.0)) return std::nullopt;
    const PowerAllocation pa = s.alloc(r11, 0.0, r13);
    return Candidate{pa, IndividualCase::DecodeForward, {kkt::Term::J1, kkt::Term::S4}};
}

IndividualSolution direct(const ChannelGains& ch) {
    IndividualSolution sol;
    sol.case_id = IndividualCase::Direct;
    sol.alpha1 = 0.0;
    sol.allocation.rho10 = ch.p1;
    sol.allocation.rho23 = ch.p2;
    sol.rate = capacity(ch.g10 * ch.g10 * ch.p1);
    return sol;
}

IndividualCase classify(const PowerAllocation& pa, double tol) {
    if (pa.rho13 <= tol) return pa.rho10 > tol ? IndividualCase::PdfNoRepetition : IndividualCase::TwoHop;
    return pa.rho10 > tol ? IndividualCase::PdfRepetition : IndividualCase::DecodeForward;
}

}  // namespace

std::string_view to_string(IndividualCase c) { return kNames[static_cast<int>(c)]; }

std::optional<IndividualCase> individual_case_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == s) return static_cast<IndividualCase>(i);
    return std::nullopt;
}

Table1Definitions table1_definitions(const ChannelGains& ch, double alpha1,
                                     const PowerAllocation& partial) {
    if (ch.g10 == 0.0 || ch.g12 == 0.0) throw SingularChannel("table definitions need g10 > 0 and g12 > 0");
    if (!(alpha1 > 0.0 && alpha1 < 1.0)) throw ParameterError("alpha1 must lie in (0, 1)");
    const double a = alpha1, b = 1.0 - alpha1;
    const double g10s = ch.g10 * ch.g10, g12s = ch.g12 * ch.g12;
    const double ratio = ch.g20 / ch.g10;
    const double r23 = ch.p2 / b;
    const double p1 = ch.p1;

    const double a1 = 1.0 / g10s - 1.0 / g12s;
    auto a4_of = [=](double r13) { return 1.0 + ratio * std::sqrt(r23 / r13); };
    auto a5_of = [=](double r13) {
        return r13 + ratio * ratio * r23 + 2.0 * ratio * std::sqrt(r13 * r23);
    };
    auto b1_of = [=](double r13, double a4, double a5) {
        return a4 * (p1 + 1.0 / g10s - b * r13) + a * a1 + b * (a4 * a1 + a5);
    };
    auto b2_of = [=](double r13, double a5) { return a1 * (p1 + 1.0 / g10s + b * (a5 - r13)); };
    auto f1_of = [=](double r11, double r10, double a5) {
        return a * c2(g10s * r11) + b * c2(g10s * (r10 + a5)) - a * c2(g12s * r11);
    };
    auto rho11_of = [=](double r13) {
        const double a4 = a4_of(r13), a5 = a5_of(r13);
        const auto x = num::larger_root(a4, b1_of(r13, a4, a5), b2_of(r13, a5));
        return x ? *x - 1.0 / g10s : std::numeric_limits<double>::quiet_NaN();
    };

    Table1Definitions d;
    d.a1 = a1;
    d.a2 = 1.0 / g10s + partial.rho11;
    d.a3 = 1.0 / g12s + partial.rho11;
    d.a4 = a4_of(partial.rho13);
    d.a5 = a5_of(partial.rho13);
    d.b1 = b1_of(partial.rho13, d.a4, d.a5);
    d.b2 = b2_of(partial.rho13, d.a5);
    d.f1 = f1_of(partial.rho11, partial.rho10, d.a5);
    d.f3 = (b / a) * c2(g10s * d.a5);
    const double c = d.a4 - 1.0;
    d.rho10_stationary = d.a3 * ((1.0 + c) * d.a2 - d.a5) / (c * d.a2 + d.a3) - 1.0 / g10s;
    d.rho11_of_rho13 = rho11_of;
    d.f2 = [=](double r13) {
        const double r11 = rho11_of(r13);
        const double r10 = (p1 - a * r11) / b - r13;
        return r10 - (std::exp2(f1_of(r11, r10, a5_of(r13)) / b) - 1.0) / g10s;
    };
    d.f4 = [=](double r13) {
        const double supplied = (p1 - b * r13) / a;
        const double t = std::exp2((b / a) * c2(g10s * a5_of(r13)));
        const double den = g12s - g10s * t;
        const double tight = den > 0.0 ? (t - 1.0) / den : std::numeric_limits<double>::max();
        return supplied - tight;
    };
    return d;
}

IndividualSolution maximize_individual_fixed_alpha(const ChannelGains& ch, double alpha1) {
    ch.validate();
    if (!(alpha1 >= 0.0 && alpha1 <= 1.0)) throw ParameterError("alpha1 must lie in [0, 1)");

    // g20 = 0 makes the relay useless: S4 <= C(g10^2 P1).
    const bool cooperative = ch.g12 > ch.g10 && ch.g20 > 0.0 && ch.p1 > 0.0;
    if (!cooperative || alpha1 == 0.0) return direct(ch);
    if (alpha1 == 1.0) throw DegeneratePhase("alpha1 = 1 leaves no cooperative phase");

    const Setup s(ch, alpha1);
    std::ostringstream diag;
    std::optional<Candidate> pick;

    if (ch.g10 > 0.0) {
        const Table1Definitions d = table1_definitions(ch, alpha1, s.alloc(0.0, 0.0, 0.0));
        if (!(pick = try_case3(s)))
            if (!(pick = try_relay_limited(s)))
                if (!(pick = try_case2a(s, d))) pick = try_case2b(s, d);
        if (!pick) diag << "no closed-form case matched; ";
    } else {
        diag << "g10 = 0 has no closed form; ";
    }

    IndividualSolution sol;
    sol.alpha1 = alpha1;
    if (pick) {
        const double res = s.kkt(pick->pa, pick->active);
        if (res <= kKktTol) {
            sol.allocation = pick->pa;
            sol.case_id = pick->id;
            sol.kkt_residual = res;
            sol.relay_limited = pick->relay_limited;
        } else {
            diag << "case " << to_string(pick->id) << " rejected, kkt residual " << res << "; ";
            pick.reset();
        }
    }
    if (!pick) {
        const auto red = reduced::individual(ch, alpha1);
        const auto r = s.rates(red.allocation);
        const double tol = 1e-7 * std::max(1.0, ch.p1 / s.beta);
        sol.allocation = red.allocation;
        sol.case_id = classify(red.allocation, tol);
        sol.relay_limited = r.j1 - r.s4 > 1e-7 * std::max(1.0, r.s4);
        std::vector<kkt::Term> active;
        if (!sol.relay_limited) active.push_back(kkt::Term::J1);
        if (r.s4 - r.j1 <= 1e-7 * std::max(1.0, r.j1)) active.push_back(kkt::Term::S4);
        sol.kkt_residual = s.kkt(red.allocation, active);
        sol.fallback = true;
        diag << "reduced concave solve used";
    }
    sol.diagnostics = diag.str();
    const auto r = eval_constraints(ch, s.phases(), sol.allocation);
    sol.rate = std::min(r.j1, r.s4);
    return sol;
}

}  // namespace mactc
