#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "qstat/moments.hpp"
#include "qstat/qgaussian.hpp"

using namespace qstat;

TEST_SUITE("moments") {

TEST_CASE("raw moment oracle") {
    const auto p = make_params(1.3, 0.7, 1.2);
    const auto m1 = raw_moment_oracle(p, 1, 1e-10);
    CHECK(m1.converged);
    CHECK(m1.value == doctest::Approx(0.7).epsilon(1e-9));

    const auto v = raw_moment_oracle(make_params(1.5, 0.0, 1.0), 2, 1e-9);
    CHECK(v.converged);
    CHECK(v.value == doctest::Approx(3.0).epsilon(1e-7));

    CHECK_FALSE(raw_moment_oracle(make_params(1.8, 0.0, 1.0), 2).converged);
    CHECK_FALSE(raw_moment_oracle(make_params(1.45, 0.0, 1.0), 4).converged);
}

TEST_CASE("unnormalized q-moment oracle") {
    const auto p = make_params(1.4, 0.0, 1.3);
    const auto z = unnormalized_q_moment(p, 0, 1.0, 1e-10);
    CHECK(z.converged);
    CHECK(z.value == doctest::Approx(1.0).epsilon(1e-9));

    const auto odd = unnormalized_q_moment(p, 1, 1.4, 1e-10);
    CHECK(odd.converged);
    CHECK(std::fabs(odd.value) <= 1e-9);

    const auto cls = unnormalized_q_moment(make_params(1.0, 0.6, 1.1), 1, 1.0, 1e-10);
    CHECK(cls.value == doctest::Approx(0.6).epsilon(1e-9));
}

TEST_CASE("closed ordinary moments") {
    CHECK(variance_closed(make_params(1.0, 0.0, 1.7)) == doctest::Approx(1.7).epsilon(1e-14));
    CHECK(variance_closed(make_params(1.5, 0.0, 1.0)) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(mean_closed(make_params(0.8, -2.5, 1.0)) == -2.5);
    CHECK(kurtosis_closed(1.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(kurtosis_closed(1.2) == doctest::Approx(4.2).epsilon(1e-13));
    CHECK(fourth_moment_standard_closed(1.2)
          == doctest::Approx(3.0 * 1.8 * 1.8 / (1.4 * 1.0)).epsilon(1e-13));
    CHECK_THROWS_AS(variance_closed(make_params(5.0 / 3.0, 0.0, 1.0)), std::domain_error);
    CHECK_THROWS_AS(variance_closed(make_params(1.8, 0.0, 1.0)), std::domain_error);
    CHECK_THROWS_AS(kurtosis_closed(1.4), std::domain_error);
    CHECK_THROWS_AS(kurtosis_closed(2.0), std::domain_error);
}

TEST_CASE("closed deformed moments") {
    const auto g = make_params(1.0, 0.4, 1.3);
    CHECK(eq_x_closed(g) == doctest::Approx(0.4).epsilon(1e-13));
    CHECK(e2qm1_x2_closed(g) == doctest::Approx(1.3 + 0.16).epsilon(1e-13));
    CHECK(eq_x_closed(make_params(1.5, 0.0, 1.0)) == doctest::Approx(0.0));

    CHECK(normalized_q_variance(make_params(1.0, 0.0, 1.7))
          == doctest::Approx(1.7).epsilon(1e-13));
    CHECK(normalized_q_variance(make_params(1.5, 0.0, 1.0))
          == doctest::Approx(0.6).epsilon(1e-14));
    for (double q : {0.8, 1.2, 2.0})
        CHECK(normalized_mean(make_params(q, -1.2, 0.8)) == doctest::Approx(-1.2));
}

TEST_CASE("normalized kurtosis closed form and window") {
    CHECK(normalized_kurtosis(1.0) == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(normalized_kurtosis(1.2)
          == doctest::Approx(3.0 * 2.2 * 2.2 / (3.0 * 2.6)).epsilon(1e-13));
    CHECK(normalized_kurtosis(2.9) > 0.0);
    // the closed form only reconciles with the escort oracle on (3/4, 3)
    CHECK_THROWS_AS(normalized_kurtosis(0.74), std::domain_error);
    CHECK_THROWS_AS(normalized_kurtosis(0.6000001), std::domain_error);
    CHECK_THROWS_AS(normalized_kurtosis(3.0), std::domain_error);
}

TEST_CASE("closed vs oracle across a q sweep") {
    for (double q : {0.5, 1.0, 1.3}) {
        const auto p = make_params(q, 0.4, 1.7);
        const auto v = central_moment_oracle(p, 2, 1e-9);
        CHECK(v.converged);
        CHECK(variance_closed(p) == doctest::Approx(v.value).epsilon(1e-7));
    }
    const auto p = make_params(1.2, 0.0, 1.0);
    const auto e2 = normalized_q_moment_oracle(p, 2, 1.4, 1e-9);
    CHECK(e2.converged);
    CHECK(normalized_q_variance(p) == doctest::Approx(e2.value).epsilon(1e-7));
}

TEST_CASE("moment_report plumbing") {
    QuadratureResult ora;
    ora.value = 3.0 + 5e-10;
    ora.error_estimate = 1e-9;
    ora.converged = true;
    const auto rep = moment_report("variance", 3.0, ora);
    CHECK(rep.abs_err <= 1e-8);
    CHECK(rep.rel_err <= 1e-8);
    CHECK(rep.oracle_converged);

    QuadratureResult bad;
    bad.converged = false;
    const auto rep2 = moment_report("diverged", std::nan(""), bad);
    CHECK_FALSE(rep2.oracle_converged);
}

} // TEST_SUITE
