#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qstat/qalgebra.hpp"

using namespace qstat;

TEST_SUITE("qalgebra") {

TEST_CASE("q_exp values") {
    CHECK(q_exp(1.0, 0.0) == 1.0);
    CHECK(q_exp(0.5, -4.0) == 0.0); // bracket 1 + 0.5*(-4) <= 0, cutoff
    CHECK(q_exp(2.0, -1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(q_exp(1.0, 1.0) == doctest::Approx(std::numbers::e).epsilon(1e-15));
    CHECK(std::isinf(q_exp(1.5, 3.0))); // pole side for q > 1
}

TEST_CASE("q_log values") {
    CHECK(q_log(1.0, std::numbers::e) == doctest::Approx(1.0).epsilon(1e-14));
    for (double q : {-1.0, 0.0, 0.5, 1.0, 2.0, 2.7})
        CHECK(q_log(q, 1.0) == 0.0);
    CHECK(q_log(2.0, 0.5) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK_THROWS_AS(q_log(1.3, 0.0), std::domain_error);
    CHECK_THROWS_AS(q_log(1.3, -2.0), std::domain_error);
}

TEST_CASE("q_sum values") {
    CHECK(q_sum(1.0, 2.0, 3.0) == doctest::Approx(5.0));
    CHECK(q_sum(0.0, 2.0, 3.0) == doctest::Approx(11.0));
    for (double q : {0.0, 0.7, 1.0, 2.2})
        CHECK(q_sum(q, 0.37, 0.0) == 0.37);
}

TEST_CASE("q_prod values") {
    CHECK(q_prod(1.0, 2.0, 3.0) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(q_prod(0.5, 4.0, 4.0) == doctest::Approx(9.0).epsilon(1e-14));
    for (double q : {0.0, 0.5, 1.0, 1.5})
        CHECK(q_prod(q, 1.7, 1.0) == doctest::Approx(1.7).epsilon(1e-14));
    CHECK_THROWS_AS(q_prod(0.5, -1.0, 2.0), std::domain_error);
}

TEST_CASE("q_neg values") {
    CHECK(q_neg(1.0, 5.0) == doctest::Approx(-5.0));
    CHECK(q_neg(0.0, 1.0) == doctest::Approx(-0.5));
    CHECK(q_neg(1.7, 0.0) == 0.0);
    // defining identity x (+) neg(x) = 0
    for (double q : {0.0, 0.5, 1.5})
        for (double x : {-0.4, 0.2, 0.9})
            CHECK(q_sum(q, x, q_neg(q, x)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(q_neg(0.5, -2.0), std::domain_error);
}

TEST_CASE("q_inv values") {
    CHECK(q_inv(1.0, 4.0) == doctest::Approx(0.25).epsilon(1e-14));
    for (double q : {0.0, 0.5, 1.0, 2.5})
        CHECK(q_inv(q, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(q_inv(0.5, 4.0) == 0.0); // cutoff boundary: [2 - 2]^2
    for (double q : {0.5, 1.0, 1.3})
        CHECK(q_prod(q, 1.1, q_inv(q, 1.1)) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("folds") {
    CHECK(q_sum_fold(1.0, 2.0, 3) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(q_sum_fold(0.0, 1.0, 2) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(q_sum_fold(0.6, 0.23, 1) == doctest::Approx(0.23).epsilon(1e-15));
    CHECK(q_prod_fold(1.0, 2.0, 3) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(q_prod_fold(0.5, 4.0, 2) == doctest::Approx(9.0).epsilon(1e-14));
    CHECK(q_prod_fold(1.8, 1.3, 1) == doctest::Approx(1.3).epsilon(1e-15));
    // fold equals the iterated operation
    double acc = 0.0;
    for (int k = 0; k < 5; ++k)
        acc = q_sum(0.7, acc, 0.2);
    CHECK(acc == doctest::Approx(q_sum_fold(0.7, 0.2, 5)).epsilon(1e-14));
    double pacc = 1.0;
    for (int k = 0; k < 4; ++k)
        pacc = q_prod(1.4, pacc, 1.1);
    CHECK(pacc == doctest::Approx(q_prod_fold(1.4, 1.1, 4)).epsilon(1e-13));
    CHECK_THROWS_AS(q_sum_fold(1.0, 0.5, 0), std::domain_error);
}

TEST_CASE("exchange laws, spot") {
    for (double q : {0.0, 0.5, 1.0, 1.5}) {
        const double x = 0.21, y = -0.13;
        CHECK(q_exp(q, x) * q_exp(q, y)
              == doctest::Approx(q_exp(q, q_sum(q, x, y))).epsilon(1e-13));
        CHECK(q_prod(q, q_exp(q, x), q_exp(q, y))
              == doctest::Approx(q_exp(q, x + y)).epsilon(1e-13));
        const double u = 1.4, v = 0.8;
        CHECK(q_log(q, u * v)
              == doctest::Approx(q_sum(q, q_log(q, u), q_log(q, v))).epsilon(1e-13));
        CHECK(q_log(q, q_prod(q, u, v))
              == doctest::Approx(q_log(q, u) + q_log(q, v)).epsilon(1e-13));
    }
}

TEST_CASE("classical band routing") {
    CHECK(classical(1.0));
    CHECK(classical(1.0 + 0.5e-12));
    CHECK_FALSE(classical(1.0 + 1e-9));
    // values vary smoothly across the band edge
    CHECK(q_exp(1.0 + 0.9e-12, 0.4) == doctest::Approx(std::exp(0.4)).epsilon(1e-10));
    CHECK(q_log(1.0 - 0.9e-12, 2.5) == doctest::Approx(std::log(2.5)).epsilon(1e-10));
}

} // TEST_SUITE
