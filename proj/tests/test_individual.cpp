#include <cmath>
#include <random>

#include "doctest.h"
#include "mactc/errors.hpp"
#include "mactc/individual_optimizer.hpp"
#include "support.hpp"

using namespace mactc;

namespace {

void check_invariants(const ChannelGains& ch, const IndividualSolution& s) {
    const auto pd = s.phases();
    const auto res = power_residuals(ch, pd, s.allocation);
    CHECK(res[0] <= 1e-9);
    CHECK(res[1] <= 1e-9);
    CHECK(s.allocation.rho22 == 0.0);
    CHECK(s.allocation.rho20 == 0.0);
    if (pd.alpha3 > 0.0) CHECK(s.allocation.rho23 == doctest::Approx(ch.p2 / pd.alpha3).epsilon(1e-12));
    const auto r = eval_constraints(ch, pd, s.allocation);
    CHECK(std::abs(std::min(r.j1, r.s4) - s.rate) <= 1e-9);
}

}  // namespace

TEST_SUITE("individual_optimizer") {

TEST_CASE("direct when the relay link is weaker") {
    const ChannelGains ch{0.5, 0.5, 1, 1, 2, 2};
    const auto s = maximize_individual_fixed_alpha(ch, 0.4);
    CHECK(s.case_id == IndividualCase::Direct);
    CHECK(s.rate == doctest::Approx(std::log2(3.0)));
    CHECK(s.alpha1 == 0.0);
    check_invariants(ch, s);
}

TEST_CASE("equal gains tie goes to direct") {
    const ChannelGains ch{1, 1, 1, 1, 2, 2};
    const auto s = maximize_individual_fixed_alpha(ch, 0.4);
    CHECK(s.case_id == IndividualCase::Direct);
    CHECK(s.rate == doctest::Approx(std::log2(3.0)));
}

TEST_CASE("paper setup at alpha1 = 0.5 against the reference") {
    const auto g = test::golden("reference.json")["individual_symmetric"];
    const ChannelGains ch = g["gains"].get<ChannelGains>();
    const auto s = maximize_individual_fixed_alpha(ch, g["alpha1"]);
    CHECK(s.rate > std::log2(3.0));
    CHECK(s.rate == doctest::Approx(g["rate"].get<double>()).epsilon(1e-6));
    CHECK(s.case_id == IndividualCase::DecodeForward);
    CHECK_FALSE(s.fallback);
    check_invariants(ch, s);
}

TEST_CASE("random channels against the reference") {
    for (const auto& c : test::golden("reference.json")["random_fixed_phase"]) {
        const ChannelGains ch = c["gains"].get<ChannelGains>();
        const auto s = maximize_individual_fixed_alpha(ch, c["phases"][0]);
        CAPTURE(c.dump());
        CHECK(std::abs(s.rate - c["individual_rate"].get<double>()) <= 1e-6);
        check_invariants(ch, s);
    }
}

TEST_CASE("case tightness and cooperation gain") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ua(0.05, 0.9);
    int seen2 = 0, seen3 = 0;
    for (int k = 0; k < 300; ++k) {
        const ChannelGains ch = test::random_channel(rng, k % 2 ? 2 : 3);
        const auto s = maximize_individual_fixed_alpha(ch, ua(rng));
        check_invariants(ch, s);
        CHECK(s.rate >= capacity(ch.g10 * ch.g10 * ch.p1) - 1e-9);
        if (s.fallback || s.relay_limited) continue;
        CHECK(s.kkt_residual <= 1e-6);
        const auto r = eval_constraints(ch, s.phases(), s.allocation);
        if (s.case_id == IndividualCase::PdfRepetition || s.case_id == IndividualCase::DecodeForward) {
            ++seen2;
            CHECK(std::abs(r.j1 - r.s4) <= 1e-6 * std::max(1.0, r.j1));
        } else if (s.case_id == IndividualCase::PdfNoRepetition || s.case_id == IndividualCase::TwoHop) {
            ++seen3;
            CHECK(r.j1 < r.s4);
        }
    }
    CHECK(seen2 > 20);
    CHECK(seen3 > 5);
}

TEST_CASE("rate is nondecreasing in g12") {
    double prev = 0.0;
    for (double g12 = 0.2; g12 <= 12.0; g12 += 0.2) {
        const auto s = maximize_individual_fixed_alpha({g12, 1, 1, 1, 2, 2}, 0.3);
        CHECK(s.rate >= prev - 1e-9);
        prev = s.rate;
    }
}

TEST_CASE("asymptote in g12") {
    // S4 max at alpha3 -> 1: C(g10^2 P1 + g20^2 P2 + 2 g10 g20 sqrt(P1 P2)) = C(8)
    const double cap = std::log2(9.0);
    double prev_gap = 1e9;
    for (double g12 : {10.0, 100.0, 1e3, 1e4}) {
        double best = 0.0;
        for (double a = 0.005; a < 0.6; a += 0.005)
            best = std::max(best, maximize_individual_fixed_alpha({g12, 1, 1, 1, 2, 2}, a).rate);
        const double gap = cap - best;
        CHECK(gap > 0.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 0.2);
}

TEST_CASE("table definitions") {
    CHECK(table1_definitions({1, 1, 1, 1, 2, 2}, 0.5, {1, 0, 0.5, 0, 0.5, 0}).a1 == 0.0);
    CHECK(table1_definitions({2, 1, 1, 1, 2, 2}, 0.5, {1, 0, 0.5, 0, 0.5, 0}).a1 == doctest::Approx(0.75));
    CHECK_THROWS_AS(table1_definitions({0, 1, 1, 1, 2, 2}, 0.5, {}), SingularChannel);
    CHECK_THROWS_AS(table1_definitions({2, 1, 0, 1, 2, 2}, 0.5, {}), SingularChannel);

    const auto g = test::golden("reference.json")["table1"];
    const ChannelGains ch = g["gains"].get<ChannelGains>();
    PowerAllocation partial;
    partial.rho11 = g["partial"]["rho11"];
    partial.rho10 = g["partial"]["rho10"];
    partial.rho13 = g["partial"]["rho13"];
    const auto d = table1_definitions(ch, g["alpha1"], partial);
    const auto& v = g["values"];
    const std::pair<const char*, double> fields[] = {{"a1", d.a1}, {"a2", d.a2}, {"a3", d.a3}, {"a4", d.a4},
                                                     {"a5", d.a5}, {"b1", d.b1}, {"b2", d.b2}, {"f1", d.f1},
                                                     {"f3", d.f3}};
    for (const auto& [name, x] : fields) {
        CAPTURE(name);
        CHECK(x == doctest::Approx(v[name].get<double>()).epsilon(1e-12));
    }
}

TEST_CASE("preconditions") {
    CHECK_THROWS(maximize_individual_fixed_alpha({5, 5, 1, 1, 2, 2}, 1.0));
    CHECK_THROWS(maximize_individual_fixed_alpha({5, 5, 1, 1, 2, 2}, -0.1));
    CHECK_THROWS(maximize_individual_fixed_alpha({5, 5, 1, 1, -2, 2}, 0.3));
}

}
