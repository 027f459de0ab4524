#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qstat/qgaussian.hpp"
#include "qstat/qlaplace.hpp"

using namespace qstat;

TEST_SUITE("qlaplace") {

TEST_CASE("oracle at theta = 0 and classical limit") {
    const auto p = make_params(1.4, 0.5, 1.1);
    const auto z = laplace_oracle(p, 0.0, 1e-12);
    CHECK(z.converged);
    CHECK(z.value == doctest::Approx(1.0).epsilon(1e-10));

    const auto g = make_params(1.0, 0.3, 1.2);
    for (double th : {-1.0, 0.5, 1.0}) {
        const auto o = laplace_oracle(g, th, 1e-12);
        CHECK(o.converged);
        CHECK(o.value
              == doctest::Approx(std::exp(0.3 * th + 0.5 * 1.2 * th * th)).epsilon(1e-9));
    }
    const auto e = laplace_oracle(make_params(1.0, 0.0, 1.0), 1.0, 1e-12);
    CHECK(e.value == doctest::Approx(std::exp(0.5)).epsilon(1e-9));
}

TEST_CASE("closed form matches oracle; classical MGF exact") {
    CHECK(laplace_closed(make_params(1.2, 0.0, 1.0), 0.0).value == 1.0);
    const auto g = make_params(1.0, 0.3, 1.2);
    for (double th : {-1.0, -0.3, 0.5, 1.0})
        CHECK(laplace_closed(g, th).value
              == doctest::Approx(std::exp(0.3 * th + 0.5 * 1.2 * th * th)).epsilon(1e-12));

    for (double q : {1.1, 1.2, 1.3, 1.5}) {
        const auto p = make_params(q, 0.0, 1.0);
        for (double th : {-0.1, -0.01, 0.05, 0.1}) {
            const auto o = laplace_oracle(p, th, 1e-12);
            REQUIRE(o.converged);
            CHECK(laplace_closed(p, th).value == doctest::Approx(o.value).epsilon(1e-7));
        }
    }
}

TEST_CASE("derivative ladder") {
    // n=1 at q=1: both sides are the mean
    const auto g = make_params(1.0, 0.7, 1.0);
    const auto r1 = derivative_ladder_check(g, 1);
    CHECK(r1.oracle_converged);
    CHECK(r1.closed_form == doctest::Approx(0.7).epsilon(1e-4));
    CHECK(r1.oracle == doctest::Approx(0.7).epsilon(1e-9));

    // n=1 centered: both sides vanish
    const auto c = derivative_ladder_check(make_params(1.2, 0.0, 1.0), 1);
    CHECK(std::fabs(c.oracle) <= 1e-9);
    CHECK(std::fabs(c.closed_form) <= 1e-4);

    // n=2 at q=1.2: finite difference vs deformed-moment product
    const auto r2 = derivative_ladder_check(make_params(1.2, 0.0, 1.0), 2);
    CHECK(r2.oracle_converged);
    CHECK(r2.rel_err <= 1e-4);

    CHECK_THROWS_AS(derivative_ladder_check(g, 5), std::invalid_argument);
}

TEST_CASE("sum_params arithmetic") {
    const auto s = sum_params(make_params(1.0, 0.0, 1.0), make_params(1.0, 0.0, 1.0));
    CHECK(s.q == 1.0);
    CHECK(s.m == 0.0);
    CHECK(s.sigma2 == doctest::Approx(2.0));
    const auto t = sum_params(make_params(1.4, 1.0, 2.0), make_params(1.4, -1.0, 3.0));
    CHECK(t.m == doctest::Approx(0.0));
    CHECK(t.sigma2 == doctest::Approx(5.0));
    CHECK_THROWS_AS(sum_params(make_params(1.2, 0.0, 1.0), make_params(1.3, 0.0, 1.0)),
                    std::invalid_argument);
}

TEST_CASE("factorization residual: zero classically, structural otherwise") {
    const auto g = make_params(1.0, 0.0, 1.0);
    CHECK(q_independence_residual(g, g, 0.0) <= 1e-15);
    for (double th : {-0.4, 0.1, 0.7})
        CHECK(q_independence_residual(g, g, th) <= 1e-12);

    // away from q = 1 the same-index residual is order theta^2 and does NOT
    // sit below closed-form tolerance; the deformed-index cascade does
    const auto p = make_params(1.3, 0.0, 1.0);
    CHECK(q_independence_residual(p, p, 0.0) <= 1e-15);
    CHECK(q_independence_residual(p, p, 0.05) > 1e-6);
    CHECK(q_independence_residual(p, p, 0.1) > 3.0 * q_independence_residual(p, p, 0.05));

    const auto p2 = make_params(1.3, 0.0, 0.7);
    for (double th : {-0.1, 0.05, 0.1})
        CHECK(q_independence_residual_deformed(p, p2, th) <= 1e-11);
    CHECK_THROWS_AS(q_independence_residual_deformed(make_params(2.2, 0.0, 1.0),
                                                     make_params(2.2, 0.0, 1.0), 0.1),
                    std::domain_error);
}

TEST_CASE("oracle flags the integrand pole") {
    // large |theta| pushes the deformed-exponential bracket through zero
    // inside the support; the oracle reports rather than integrates junk
    const auto p = make_params(1.5, 0.0, 1.0);
    bool fine = laplace_oracle(p, 0.05, 1e-10).converged;
    CHECK(fine);
    const auto far = laplace_oracle(p, -40.0, 1e-10);
    CHECK_FALSE(far.converged);
}

} // TEST_SUITE
