#include <cmath>
#include <random>

#include "doctest.h"
#include "mactc/errors.hpp"
#include "mactc/individual_optimizer.hpp"
#include "mactc/oracle.hpp"
#include "mactc/sum_optimizer.hpp"
#include "support.hpp"

using namespace mactc;

TEST_SUITE("oracle") {

TEST_CASE("config validation") {
    OracleConfig c;
    CHECK_NOTHROW(c.validate());
    c.power_grid_points = 1;
    CHECK_THROWS_AS(c.validate(), ParameterError);
    c = {};
    c.alpha_step = 0.0;
    CHECK_THROWS_AS(c.validate(), ParameterError);
    c = {};
    c.refine_rounds = -1;
    CHECK_THROWS_AS(c.validate(), ParameterError);
}

TEST_CASE("individual oracle matches the closed form") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ua(0.05, 0.9);
    OracleConfig cfg;
    cfg.objective = Objective::IndividualR1;
    for (int k = 0; k < 30; ++k) {
        const ChannelGains ch = test::random_channel(rng, 1 + k % 4);
        const auto s = maximize_individual_fixed_alpha(ch, ua(rng));
        const auto o = oracle_individual(ch, s.alpha1, cfg);
        CAPTURE(k);
        CHECK(o.rate <= s.rate + 1e-9);
        CHECK(s.rate - o.rate <= 1e-4 * std::max(1.0, s.rate));
    }
}

TEST_CASE("sum oracle matches the closed form at the effective phases") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> ua(0.05, 0.4);
    const OracleConfig cfg;
    for (int k = 0; k < 8; ++k) {
        const ChannelGains ch = test::random_channel(rng, 1 + k % 4);
        const auto s = maximize_sum_fixed_alphas(ch, ua(rng), ua(rng));
        const auto o = oracle_sum(ch, s.phases.alpha1, s.phases.alpha2, cfg);
        CAPTURE(k);
        CHECK(o.rate <= s.sum_rate + 1e-9);
        CHECK(s.sum_rate - o.rate <= 1e-4 * std::max(1.0, s.sum_rate));
        const auto r = eval_constraints(ch, o.phases, o.allocation);
        CHECK(r.smin() == doctest::Approx(o.rate).epsilon(1e-12));
    }
}

TEST_CASE("phase search oracle") {
    OracleConfig cfg;
    cfg.objective = Objective::IndividualR1;
    cfg.alpha_step = 0.1;
    const auto o = oracle_phase_search(test::symmetric(5.0), cfg);
    CHECK(o.phases.alpha1 == doctest::Approx(0.4));
    CHECK(o.rate > std::log2(3.0));
}

TEST_CASE("golden records") {
    for (const char* name : {"oracle_sum.json", "oracle_individual.json"}) {
        const auto rec = test::golden(name);
        CAPTURE(name);
        CHECK(verify_golden(rec));
        const ChannelGains ch = rec["scenario"]["gains"].get<ChannelGains>();
        const PhaseDurations pd = rec["scenario"]["phases"].get<PhaseDurations>();
        const OracleConfig cfg = rec["config"].get<OracleConfig>();
        const auto o = cfg.objective == Objective::SumRate ? oracle_sum(ch, pd.alpha1, pd.alpha2, cfg)
                                                           : oracle_individual(ch, pd.alpha1, cfg);
        CHECK(o.rate == doctest::Approx(rec["rate"].get<double>()).epsilon(1e-12));
        const auto again = golden_record(rec["scenario"]["name"], ch, o, cfg);
        CHECK(again["digest"] == rec["digest"]);

        auto tampered = rec;
        tampered["rate"] = rec["rate"].get<double>() + 1e-6;
        CHECK_FALSE(verify_golden(tampered));
    }
    CHECK_FALSE(verify_golden(nlohmann::json::object()));
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

}
