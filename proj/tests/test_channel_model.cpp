#include <cmath>
#include <random>

#include "doctest.h"
#include "mactc/errors.hpp"
#include "support.hpp"

using namespace mactc;

TEST_SUITE("channel_model") {

TEST_CASE("capacity") {
    CHECK(capacity(0.0) == 0.0);
    CHECK(capacity(1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(capacity(-1e-3), DomainError);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS((ChannelGains{-1, 1, 1, 1, 1, 1}.validate()), ParameterError);
    CHECK_THROWS_AS((ChannelGains{1, 1, 1, 1, -1, 1}.validate()), ParameterError);
    CHECK_NOTHROW((ChannelGains{0, 0, 1, 1, 0, 0}.validate()));
    CHECK_THROWS(PhaseDurations::make(-0.1, 0.2));
    CHECK_THROWS(PhaseDurations::make(0.7, 0.4));
    const auto pd = PhaseDurations::make(0.3, 0.6);
    CHECK(pd.alpha3 == 1.0 - 0.3 - 0.6);
    CHECK_THROWS((PhaseDurations{0.2, 0.2, 0.5}.validate()));
}

TEST_CASE("zeta") {
    ChannelGains ch{0, 0, 1, 1, 0, 0};
    CHECK(eval_zeta(ch, {0, 0, 2, 2, 0, 0}) == doctest::Approx(4.0));
    CHECK(eval_zeta(ch, {0, 0, 0, 0, 1, 1}) == doctest::Approx(4.0));
    const auto g = test::golden("reference.json")["zeta_example"];
    ch.g10 = 1.0;
    ch.g20 = 2.0;
    const double z = eval_zeta(ch, {0, 0, 0.5, 0.25, 1.0, 0.25});
    CHECK(z == doctest::Approx(g["zeta"].get<double>()).epsilon(1e-14));
    CHECK(z == doctest::Approx(5.5));
}

TEST_CASE("classical MAC point") {
    const ChannelGains ch{5, 5, 1, 1, 2, 2};
    const auto r = eval_constraints(ch, PhaseDurations::make(0, 0), {0, 0, 2, 2, 0, 0});
    CHECK(r.s4 == doctest::Approx(std::log2(5.0)));
    CHECK(r.i1 == 0.0);
    CHECK(r.i2 == 0.0);
}

TEST_CASE("single phase degenerate") {
    const ChannelGains ch{5, 5, 1, 1, 2, 0};
    const auto r = eval_constraints(ch, PhaseDurations::make(1.0, 0.0), {2, 0, 0, 0, 0, 0});
    CHECK(r.i1 == doctest::Approx(std::log2(51.0)));
    CHECK(r.i3 == 0.0);
    CHECK(r.i4 == 0.0);
    CHECK(r.i5 == 0.0);
}

TEST_CASE("golden constraint vector at the equal split") {
    const auto g = test::golden("reference.json")["equal_split"];
    const ChannelGains ch = g["gains"].get<ChannelGains>();
    const auto pd = PhaseDurations::make(g["phases"][0], g["phases"][1]);
    const auto r = eval_constraints(ch, pd, g["allocation"].get<PowerAllocation>());
    const auto& c = g["constraints"];
    const std::pair<const char*, double> fields[] = {
        {"i1", r.i1}, {"i2", r.i2}, {"i3", r.i3}, {"i4", r.i4}, {"i5", r.i5}, {"i6", r.i6}, {"i7", r.i7},
        {"i8", r.i8}, {"zeta", r.zeta}, {"j1", r.j1}, {"j2", r.j2}, {"s1", r.s1}, {"s2", r.s2}, {"s3", r.s3},
        {"s4", r.s4}};
    for (const auto& [name, v] : fields) {
        CAPTURE(name);
        CHECK(v == doctest::Approx(c[name].get<double>()).epsilon(1e-13));
    }
}

TEST_CASE("infeasible allocations are rejected") {
    const ChannelGains ch{5, 5, 1, 1, 1.6, 1.6};
    const auto pd = PhaseDurations::make(0.2, 0.2);
    CHECK_THROWS_AS(eval_constraints(ch, pd, {2, 2, 1, 1, 1, 1.1}), InfeasibleAllocation);
    CHECK_THROWS_AS(eval_constraints(ch, pd, {2, 2, -0.1, 1, 1.1, 1}), InfeasibleAllocation);
    CHECK_THROWS_AS(eval_constraints(ch, PhaseDurations::make(0, 0.2), {1, 2, 1, 1, 1, 1}), InfeasibleAllocation);
    // within the absolute tolerance
    CHECK_NOTHROW(eval_constraints(ch, pd, {2, 2, 1, 1, 1, 1 + 1e-10}));
}

TEST_CASE("properties over random allocations") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.05, 0.45);
    for (int k = 0; k < 500; ++k) {
        const ChannelGains ch = test::random_channel(rng, 1 + k % 4);
        const auto pd = PhaseDurations::make(u(rng), u(rng));
        const auto pa = test::random_allocation(rng, ch, pd);
        const auto r = eval_constraints(ch, pd, pa);
        CHECK(r.j1 >= r.i3);
        CHECK(r.j2 >= r.i4);
        CHECK(r.s1 >= r.i5);
        CHECK(r.j1 == doctest::Approx(r.i1 + r.i3));
        CHECK(r.s4 == r.i8);
        if (pa.rho10 + pa.rho20 > 0.0) CHECK(r.j1 + r.j2 > r.s1);
        if (ch.g12 >= ch.g10 && ch.g21 >= ch.g20) {
            CHECK(r.s4 <= r.s2 + 1e-12);
            CHECK(r.s4 <= r.s3 + 1e-12);
        }

        // zeta is nondecreasing in each phase-3 power
        auto bumped = pa;
        bumped.rho13 += 0.1;
        CHECK(eval_zeta(ch, bumped) >= eval_zeta(ch, pa));
        bumped = pa;
        bumped.rho20 += 0.1;
        CHECK(eval_zeta(ch, bumped) >= eval_zeta(ch, pa));

        // g -> c g with P -> P / c^2 leaves every term unchanged
        const double c = 1.7;
        ChannelGains sc{c * ch.g12, c * ch.g21, c * ch.g10, c * ch.g20, ch.p1 / (c * c), ch.p2 / (c * c)};
        auto spa = pa.as_array();
        for (double& v : spa) v /= c * c;
        const auto rs = eval_constraints(sc, pd, PowerAllocation::from_array(spa));
        CHECK(rs.s1 == doctest::Approx(r.s1).epsilon(1e-12));
        CHECK(rs.s4 == doctest::Approx(r.s4).epsilon(1e-12));
        CHECK(rs.j2 == doctest::Approx(r.j2).epsilon(1e-12));
    }
}

TEST_CASE("swapping users mirrors the constraints") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
        const ChannelGains ch = test::random_channel(rng, 2);
        const auto pd = PhaseDurations::make(0.15, 0.3);
        const auto pa = test::random_allocation(rng, ch, pd);
        const auto a = eval_constraints(ch, pd, pa);
        const auto b = eval_constraints(ch.swapped(), pd.swapped(), pa.swapped());
        CHECK(a.j1 == doctest::Approx(b.j2));
        CHECK(a.s2 == doctest::Approx(b.s3));
        CHECK(a.s1 == doctest::Approx(b.s1));
        CHECK(a.s4 == doctest::Approx(b.s4));
    }
}

}
