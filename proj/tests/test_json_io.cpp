#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "mactc/errors.hpp"
#include "mactc/json_io.hpp"
#include "support.hpp"

using namespace mactc;

namespace {

template <class T>
T round_trip(const T& v) {
    return json::parse(json(v).dump()).get<T>();
}

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("plain types") {
    const ChannelGains ch{5, 3, 1, 1.2, 2, 3};
    CHECK(round_trip(ch) == ch);
    const auto pd = PhaseDurations::make(0.2, 0.35);
    CHECK(round_trip(pd) == pd);
    const PowerAllocation pa{1, 2, 3, 4, 5, 6};
    CHECK(round_trip(pa) == pa);
    std::mt19937_64 rng(1);
    const auto r = eval_constraints(ch, pd, test::random_allocation(rng, ch, pd));
    const auto back = round_trip(r);
    CHECK(back.s4 == r.s4);
    CHECK(back.zeta == r.zeta);
    CHECK(round_trip(RatePoint{0.5, 1.5}) == RatePoint{0.5, 1.5});
    const auto reg = region_from_constraints(1, 1, 1.5);
    CHECK(round_trip(reg).corners == reg.corners);
}

TEST_CASE("validation on read") {
    CHECK_THROWS_AS((json{{"g12", -1}, {"g21", 1}, {"g10", 1}, {"g20", 1}, {"p1", 1}, {"p2", 1}}.get<ChannelGains>()),
                    ParameterError);
    CHECK_THROWS((json{{"g12", 1}}.get<ChannelGains>()));
    CHECK_THROWS_AS((json{{"alpha1", 0.2}, {"alpha2", 0.2}, {"alpha3", 0.5}}.get<PhaseDurations>()), ParameterError);
    CHECK_THROWS((json{{"rate", 1.0}, {"alpha1", 0.1}, {"allocation", PowerAllocation{}}, {"case_id", "Bogus"},
                       {"kkt_residual", 0.0}}
                      .get<IndividualSolution>()));
}

TEST_CASE("solutions and results") {
    const ChannelGains ch = test::symmetric(5.0);
    const auto ind = maximize_individual_fixed_alpha(ch, 0.5);
    const auto ib = round_trip(ind);
    CHECK(ib.rate == ind.rate);
    CHECK(ib.case_id == ind.case_id);
    CHECK(ib.allocation == ind.allocation);

    const auto sum = maximize_sum_fixed_alphas(ch, 0.2, 0.2);
    const auto sb = round_trip(sum);
    CHECK(sb.sum_rate == sum.sum_rate);
    CHECK(sb.case_id == sum.case_id);
    CHECK(sb.phases == sum.phases);

    const auto g = gain_vs_mac(ch);
    CHECK(round_trip(g).finite_sum == g.finite_sum);

    OracleConfig cfg;
    cfg.power_grid_points = 12;
    cfg.objective = Objective::IndividualR1;
    const auto cb = round_trip(cfg);
    CHECK(cb.power_grid_points == 12);
    CHECK(cb.objective == Objective::IndividualR1);

    const auto ps = grid_search_individual(ch, 0.1);
    const auto pb = round_trip(ps);
    CHECK(pb.best_rate == ps.best_rate);
    CHECK(pb.samples.size() == ps.samples.size());
    CHECK(pb.case_id == ps.case_id);
}

TEST_CASE("topology and lookup table") {
    Topology t;
    t.dest = {0.3, -0.7};
    t.gamma = 3.0;
    const auto tb = round_trip(t);
    CHECK(tb.dest.x == 0.3);
    CHECK(tb.gamma == 3.0);
    const Bounds b{-1, 2, -3, 4};
    CHECK(round_trip(b).ymax == 4.0);

    const LookupTable lt({{test::symmetric(2.0), 0.3, 0.2, 2.5}, {test::symmetric(5.0), 0.2, 0.2, 2.8}});
    const auto lb = lookup_table_from_json(json::parse(lookup_table_to_json(lt).dump()));
    REQUIRE(lb.entries().size() == 2);
    CHECK(lb.entries()[1].ch == test::symmetric(5.0));
    CHECK(lb.entries()[0].alpha1 == 0.3);
}

TEST_CASE("files") {
    const auto path = (std::filesystem::temp_directory_path() / "mactc_json_io_test.json").string();
    write_text_file(path, json{{"a", 1}}.dump());
    CHECK(read_json_file(path)["a"] == 1);
    std::remove(path.c_str());
    CHECK_THROWS(read_json_file(path));
}

}
