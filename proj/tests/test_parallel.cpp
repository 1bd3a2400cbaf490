#include "doctest.h"
#include "mactc/oracle.hpp"
#include "mactc/phase_optimizer.hpp"
#include "mactc/planner.hpp"
#include "mactc/rate_region.hpp"
#include "support.hpp"

using namespace mactc;

// Serial is the reference; Parallel must agree bit for bit.
TEST_SUITE("parallel") {

TEST_CASE("thread cap") {
    set_max_threads(3);
    CHECK(max_threads() == 3);
    set_max_threads(0);
    CHECK(max_threads() >= 1);
}

TEST_CASE("oracle") {
    const ChannelGains ch{4, 2.5, 1, 1.3, 3, 2};
    OracleConfig cfg;
    cfg.power_grid_points = 24;
    const auto s = oracle_sum(ch, 0.2, 0.25, cfg, Exec::Serial);
    const auto p = oracle_sum(ch, 0.2, 0.25, cfg, Exec::Parallel);
    CHECK(s.rate == p.rate);
    CHECK(s.allocation == p.allocation);
    cfg.objective = Objective::IndividualR1;
    CHECK(oracle_individual(ch, 0.4, cfg, Exec::Serial).allocation ==
          oracle_individual(ch, 0.4, cfg, Exec::Parallel).allocation);
}

TEST_CASE("phase grids") {
    const ChannelGains ch{5, 3, 1, 1, 2, 2};
    const auto s = grid_search_sum(ch, 0.05, Exec::Serial);
    const auto p = grid_search_sum(ch, 0.05, Exec::Parallel);
    CHECK(s.best_rate == p.best_rate);
    CHECK(s.best_alphas == p.best_alphas);
    REQUIRE(s.samples.size() == p.samples.size());
    for (std::size_t i = 0; i < s.samples.size(); ++i) CHECK(s.samples[i].rate == p.samples[i].rate);
    CHECK(grid_search_individual(ch, 0.01, Exec::Serial).best_rate ==
          grid_search_individual(ch, 0.01, Exec::Parallel).best_rate);
    CHECK(interpolate_sum(ch, 5, 5, Exec::Serial).best_rate == interpolate_sum(ch, 5, 5, Exec::Parallel).best_rate);
}

TEST_CASE("region envelope") {
    const ChannelGains ch{5, 5, 1, 1, 2, 2};
    CHECK(envelope_region(ch, 0.1, 4, Exec::Serial) == envelope_region(ch, 0.1, 4, Exec::Parallel));
}

TEST_CASE("maps and profiles") {
    const Bounds b{-1, 1, -1, 1};
    const auto s = sum_scheme_map(Topology{}, 0.2, 0.2, b, 9, 2, 2, Exec::Serial);
    const auto p = sum_scheme_map(Topology{}, 0.2, 0.2, b, 9, 2, 2, Exec::Parallel);
    CHECK(s.csv() == p.csv());
    for (std::size_t i = 0; i < s.cells.size(); ++i)
        if (!s.cells[i].singular) CHECK(s.cells[i].rate == p.cells[i].rate);
    const auto a = individual_scheme_map(Topology{}, 0.5, b, 15, 2, 2, Exec::Serial);
    const auto c = individual_scheme_map(Topology{}, 0.5, b, 15, 2, 2, Exec::Parallel);
    CHECK(a.csv() == c.csv());

    const auto ps = rate_profile_on_line(Topology{}, {-2, 0.5}, {2, 0.5}, 9, Objective::SumRate, 2, 2, {}, Exec::Serial);
    const auto pp = rate_profile_on_line(Topology{}, {-2, 0.5}, {2, 0.5}, 9, Objective::SumRate, 2, 2, {}, Exec::Parallel);
    CHECK(profile_csv(ps) == profile_csv(pp));
}

}
