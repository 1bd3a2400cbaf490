#include <cmath>

#include "doctest.h"
#include "mactc/errors.hpp"
#include "mactc/phase_optimizer.hpp"
#include "mactc/rate_region.hpp"
#include "mactc/sum_optimizer.hpp"
#include "support.hpp"

using namespace mactc;

TEST_SUITE("gains") {

TEST_CASE("high power limits for equal direct gains") {
    const auto g = gain_vs_mac(test::symmetric(5.0));
    CHECK(g.delta_r1 == doctest::Approx(2.0));
    CHECK(g.delta_r2 == doctest::Approx(2.0));
    CHECK(g.delta_sum == doctest::Approx(1.0));
    // the limits do not depend on the cooperation links
    const auto h = gain_vs_mac(test::symmetric(50.0, 1e4));
    CHECK(h.delta_sum == doctest::Approx(1.0));
}

TEST_CASE("finite power gains") {
    const auto g = gain_vs_mac(test::symmetric(5.0));
    CHECK(g.finite_sum == doctest::Approx(std::log2(1.8)));
    CHECK(g.finite_sum == doctest::Approx(0.848).epsilon(1e-3));
    CHECK(g.finite_r1 == doctest::Approx(std::log2(3.0)));
    // finite gains climb to the limits
    double prev = 0.0;
    for (double p : {2.0, 4.0, 10.0, 100.0, 1e4}) {
        const double s = gain_vs_mac(test::symmetric(5.0, p)).finite_sum;
        CHECK(s > prev);
        CHECK(s < 1.0);
        prev = s;
    }
    CHECK(prev > 0.99);
}

TEST_CASE("asymmetric direct gains") {
    const auto g = gain_vs_mac({5, 5, 1, 2, 2, 2});
    CHECK(g.delta_r1 == doctest::Approx(std::log2(9.0)));
    CHECK(g.delta_r2 == doctest::Approx(std::log2(2.25)));
    CHECK(g.delta_sum == doctest::Approx(std::log2(1.8)));
}

TEST_CASE("singular direct links") {
    CHECK_THROWS_AS(gain_vs_mac({5, 5, 0, 1, 2, 2}), SingularChannel);
    CHECK_THROWS_AS(gain_vs_mac({5, 5, 1, 0, 2, 2}), SingularChannel);
}

TEST_CASE("realized sum gain stays below the formula value (regression)") {
    const ChannelGains ch = test::symmetric(5.0);
    const double realized =
        grid_search_sum_symmetric(ch, 0.01, Exec::Serial).best_rate - classical_mac_region(ch).smin;
    CHECK(realized == doctest::Approx(0.4907).epsilon(2e-3));
    CHECK(realized < gain_vs_mac(ch).finite_sum);
}

}
