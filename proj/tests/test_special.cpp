#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qstat/special.hpp"

using namespace qstat;

TEST_SUITE("special") {

TEST_CASE("log_gamma values") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(log_gamma(0.5) == doctest::Approx(std::log(std::sqrt(std::numbers::pi)))
                               .epsilon(1e-14));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("log_gamma tracks libm over [0.1, 50]") {
    double worst = 0.0;
    for (int i = 0; i < 400; ++i) {
        const double x = 0.1 * std::pow(500.0, i / 399.0);
        const double d = std::fabs(log_gamma(x) - std::lgamma(x))
                         / std::max(1.0, std::fabs(std::lgamma(x)));
        worst = std::max(worst, d);
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("beta values") {
    CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(beta_fn(0.5, 0.5) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
    CHECK(beta_fn(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    CHECK(beta_fn(2.0, 0.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(beta_fn(0.0, 1.0), std::domain_error);
}

TEST_CASE("c_q branch values") {
    CHECK(c_q(1.0) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    CHECK(c_q(2.0) == doctest::Approx(std::numbers::pi).epsilon(1e-13));
    CHECK(c_q(0.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    CHECK_THROWS_AS(c_q(3.0), std::domain_error);
    CHECK_THROWS_AS(c_q(3.7), std::domain_error);
}

TEST_CASE("c_q continuity at the classical point") {
    const double root_pi = std::sqrt(std::numbers::pi);
    CHECK(c_q(1.0 + 2e-6) == doctest::Approx(root_pi).epsilon(1e-5));
    CHECK(c_q(1.0 - 2e-6) == doctest::Approx(root_pi).epsilon(1e-5));
    // inside the short-circuit band the value is exact
    CHECK(c_q(1.0 + 1e-9) == root_pi);
}

TEST_CASE("c_q is positive and decreasing toward q=3 blowup region") {
    // not monotone overall, just sanity on a few points
    for (double q : {-1.0, 0.0, 0.9, 1.0, 1.5, 2.0, 2.5, 2.9})
        CHECK(c_q(q) > 0.0);
    CHECK(c_q(2.9) > c_q(2.0)); // fat tails inflate the mass integral
}

} // TEST_SUITE
