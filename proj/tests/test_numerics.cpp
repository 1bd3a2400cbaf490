#include <cmath>
#include <limits>

#include "doctest.h"
#include "mactc/kkt.hpp"
#include "mactc/numerics.hpp"
#include "mactc/reduced_solver.hpp"

using namespace mactc;

TEST_SUITE("numerics") {

TEST_CASE("golden section") {
    const auto e = num::golden_max([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0);
    CHECK(e.x == doctest::Approx(0.3).epsilon(1e-9));
    // maximum on an endpoint
    const auto m = num::golden_max([](double x) { return x; }, 0.0, 2.0);
    CHECK(m.x == 2.0);
}

TEST_CASE("bisection and scan") {
    CHECK(num::bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0) == doctest::Approx(std::sqrt(2.0)));
    const auto r = num::scan_root([](double x) { return std::cos(x); }, 0.0, 3.0);
    REQUIRE(r);
    CHECK(*r == doctest::Approx(M_PI / 2));
    CHECK_FALSE(num::scan_root([](double x) { return 1.0 + x * x; }, -1.0, 1.0));
    // NaN cells break the chain instead of producing a false bracket
    const auto nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_FALSE(num::scan_root([&](double x) { return x < 0.5 ? -1.0 : (x < 0.6 ? nan : 1.0); }, 0.0, 1.0, 10));
}

TEST_CASE("concave argmax from the derivative") {
    CHECK(num::concave_argmax([](double x) { return 1.0 - x; }, 0.0, 3.0) == doctest::Approx(1.0));
    CHECK(num::concave_argmax([](double x) { return -x - 1.0; }, 0.0, 3.0) == 0.0);
    CHECK(num::concave_argmax([](double) { return 1.0; }, 0.0, 3.0) == 3.0);
}

TEST_CASE("larger root") {
    const auto r = num::larger_root(1.0, 3.0, 2.0);  // x^2 - 3x + 2
    REQUIRE(r);
    CHECK(*r == doctest::Approx(2.0));
    CHECK_FALSE(num::larger_root(1.0, 0.0, 1.0));
}

TEST_CASE("kkt residual is small at the reduced optimum") {
    const ChannelGains ch{5, 5, 1, 1, 2, 2};
    const auto pd = PhaseDurations::make(0.2, 0.2);
    const auto red = reduced::sum(ch, pd);
    kkt::Problem p;
    p.active = {kkt::Term::S1, kkt::Term::S4};
    CHECK(kkt::evaluate(ch, pd, red.allocation, p).residual < 1e-5);
    // an arbitrary allocation is not stationary
    CHECK(kkt::evaluate(ch, pd, {2, 2, 1, 1, 1, 1}, p).residual > 1e-3);
}

}
