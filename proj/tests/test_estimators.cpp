#include "doctest.h"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qstat/estimators.hpp"
#include "qstat/qgaussian.hpp"

using namespace qstat;

TEST_SUITE("estimators") {

TEST_CASE("summarize exact arithmetic") {
    const std::array<double, 4> zeros{0.0, 0.0, 0.0, 0.0};
    const auto s0 = summarize(zeros, 1.0);
    CHECK(s0.n == 4);
    CHECK(s0.mean == 0.0);
    CHECK(s0.s2 == 0.0);
    CHECK(s0.sigma2_hat == 0.0);

    const std::array<double, 2> pm{-1.0, 1.0};
    const auto s1 = summarize(pm, 1.0);
    CHECK(s1.mean == 0.0);
    CHECK(s1.s2 == 1.0);          // 1/n convention
    CHECK(s1.sigma2_hat == 2.0);  // n/(n-1) * 1 at q=1

    const auto s2 = summarize(pm, 1.5);
    CHECK(s2.sigma2_hat == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    const std::array<double, 1> one{3.0};
    CHECK_THROWS_AS(summarize(one, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(summarize(pm, 1.8), std::domain_error); // variance window
}

TEST_CASE("confidence interval widths") {
    SampleStats st;
    st.n = 100;
    st.mean = 0.0;
    st.q = 1.0;
    const auto ci = confidence_interval(st, 1.0, 0.95);
    CHECK(ci.hi == doctest::Approx(0.1959963984540054).epsilon(1e-9));
    CHECK(ci.lo == doctest::Approx(-ci.hi).epsilon(1e-12));

    st.q = 1.5;
    const auto ci3 = confidence_interval(st, 1.0, 0.95);
    CHECK(ci3.hi / ci.hi == doctest::Approx(std::sqrt(3.0)).epsilon(1e-8));

    // width blows up as the level approaches 1
    st.q = 1.0;
    const double w95 = confidence_interval(st, 1.0, 0.95).hi;
    const double w99 = confidence_interval(st, 1.0, 0.99).hi;
    const double w9999 = confidence_interval(st, 1.0, 0.9999).hi;
    CHECK(w99 > w95);
    CHECK(w9999 > w99);

    // the deformed-quantile variant widens the interval for q > 1
    st.q = 1.2;
    const auto zn = confidence_interval(st, 1.0, 0.95, ZSource::normal);
    const auto zq = confidence_interval(st, 1.0, 0.95, ZSource::qgaussian);
    CHECK(zq.hi > zn.hi);
}

TEST_CASE("bias experiment reproduces the finite-n law") {
    const struct {
        double q;
        std::size_t n;
    } cfg[] = {{1.0, 10}, {1.5, 10}};
    for (const auto& c : cfg) {
        RandomSource rng(2024);
        const auto p = make_params(c.q, 0.0, 1.0);
        const auto rep = bias_experiment(p, c.n, 20000, rng);
        CHECK(rep.pass);
        // E(S^2) = ((n-1)/n) V exactly; the target field carries it
        const double V = (3.0 - c.q) / (5.0 - 3.0 * c.q);
        CHECK(rep.s2_target == doctest::Approx(0.9 * V).epsilon(1e-13));
        CHECK(rep.hat_target == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(rep.s2_dev_se <= 4.0);
        CHECK(rep.hat_dev_se <= 4.0);
    }
    RandomSource bad_rng(1);
    CHECK_THROWS_AS(bias_experiment(make_params(1.0, 0.0, 1.0), 1, 10, bad_rng),
                    std::invalid_argument);
}

TEST_CASE("law of large numbers diagnostic") {
    const std::array<std::size_t, 3> sched{100, 10000, 200000};
    for (double q : {1.0, 1.5, 0.5}) {
        RandomSource rng(77);
        const auto p = make_params(q, q == 1.5 ? 2.0 : 0.0, 1.0);
        const auto rep = lln_check(p, sched, rng);
        REQUIRE(rep.rows.size() == 3);
        CHECK(rep.pass);
        CHECK(rep.rows.back().deviation < rep.rows.back().gate);
        const double V = (3.0 - q) / (5.0 - 3.0 * q) * p.sigma2;
        for (const auto& row : rep.rows)
            CHECK(row.gate
                  == doctest::Approx(5.0 * std::sqrt(V / double(row.n))).epsilon(1e-12));
    }
}

TEST_CASE("coverage experiment near nominal") {
    const auto p = make_params(1.2, 0.0, 1.0);
    RandomSource rng(31337);
    const auto rep = coverage_experiment(p, 200, 600, 0.95, ZSource::normal, rng);
    CHECK(rep.coverage > 0.90);
    CHECK(rep.coverage < 0.99);
}

} // TEST_SUITE
