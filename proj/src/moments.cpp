#include "qstat/moments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "qstat/qalgebra.hpp"
#include "qstat/special.hpp"

namespace qstat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool diverges(const QGaussianParams& p, int n, double power)
{
    // pdf^power decays like |x|^{-2 power/(q-1)} for q > 1; the n-th moment
    // integrand then needs n - 2 power/(q-1) < -1
    if (p.q <= 1.0)
        return false;
    return n - 2.0 * power / (p.q - 1.0) >= -1.0 - 1e-12;
}

QuadratureResult divergent_result()
{
    QuadratureResult r;
    r.error_estimate = kInf;
    return r;
}

// integral of u^n pdf(m+u)^power du, u = x - m, optionally with the raw
// weight (u+m)^n instead. The q > 1 case integrates a central window plus a
// rigorous algebraic tail bound: pdf(m+u) <= a (c u^2)^{-1/(q-1)} with
// c = (q-1) beta / sigma^2, so the clipped tails are controlled explicitly
// instead of trusting slow adaptive refinement near the moment-existence
// boundary.
QuadratureResult moment_integral(const QGaussianParams& p, int n, double power, bool central,
                                 double tol)
{
    if (diverges(p, n, power))
        return divergent_result();

    auto f = [&p, n, power, central](double u) {
        const double w = central ? u : u + p.m;
        double xn = 1.0;
        for (int i = 0; i < n; ++i)
            xn *= w;
        return xn * std::pow(pdf(p, p.m + u), power);
    };

    if (p.q <= 1.0 || classical(p.q)) {
        const double lo = p.support_lo - p.m; // -inf for q >= 1
        const double hi = p.support_hi - p.m;
        return integrate(f, lo, hi, tol);
    }

    // bulk window plus algebraic tails in the centered variable; the weighted
    // integrand decays like |u|^{-(2 power/(q-1) - n)}, which the divergence
    // screen guarantees is an exponent above 1
    const double T =
        10.0 * p.sigma / std::sqrt((p.q - 1.0) * p.beta) + 10.0 * std::fabs(p.m);
    const double s = 2.0 * power / (p.q - 1.0) - n;
    const auto bulk = integrate(f, -T, T, 0.5 * tol);
    const auto right = integrate_algebraic_tail(f, T, s, 0.25 * tol);
    const auto left =
        integrate_algebraic_tail([&f](double z) { return f(-z); }, T, s, 0.25 * tol);
    QuadratureResult r;
    r.value = bulk.value + right.value + left.value;
    r.error_estimate = bulk.error_estimate + right.error_estimate + left.error_estimate;
    r.evaluations = bulk.evaluations + right.evaluations + left.evaluations;
    r.converged = bulk.converged && right.converged && left.converged;
    return r;
}

} // namespace

QuadratureResult raw_moment_oracle(const QGaussianParams& p, int n, double tol)
{
    if (n < 0)
        throw std::domain_error("raw_moment_oracle: n must be >= 0");
    return moment_integral(p, n, 1.0, false, tol);
}

QuadratureResult central_moment_oracle(const QGaussianParams& p, int n, double tol)
{
    if (n < 0)
        throw std::domain_error("central_moment_oracle: n must be >= 0");
    return moment_integral(p, n, 1.0, true, tol);
}

QuadratureResult unnormalized_q_moment(const QGaussianParams& p, int n, double power, double tol)
{
    if (n < 0)
        throw std::domain_error("unnormalized_q_moment: n must be >= 0");
    if (!(power > 0.0))
        throw std::domain_error("unnormalized_q_moment: power must be positive");
    return moment_integral(p, n, power, false, tol);
}

QuadratureResult normalized_q_moment_oracle(const QGaussianParams& p, int n, double power,
                                            double tol)
{
    if (n < 0)
        throw std::domain_error("normalized_q_moment_oracle: n must be >= 0");
    const QuadratureResult nu = nu_p_oracle(p, power, tol * 1e-2);
    if (!nu.converged)
        return divergent_result();
    QuadratureResult r = moment_integral(p, n, power, true, tol * nu.value);
    r.value /= nu.value;
    r.error_estimate = r.error_estimate / nu.value + std::fabs(r.value) * nu.error_estimate / nu.value;
    return r;
}

double mean_closed(const QGaussianParams& p)
{
    return p.m;
}

double variance_closed(const QGaussianParams& p)
{
    if (p.q >= 5.0 / 3.0)
        throw std::domain_error("variance_closed: requires q < 5/3");
    return (3.0 - p.q) / (5.0 - 3.0 * p.q) * p.sigma2;
}

double kurtosis_closed(double q)
{
    if (q >= 7.0 / 5.0)
        throw std::domain_error("kurtosis_closed: requires q < 7/5");
    return 3.0 * (5.0 - 3.0 * q) / (7.0 - 5.0 * q);
}

double fourth_moment_standard_closed(double q)
{
    if (q >= 7.0 / 5.0)
        throw std::domain_error("fourth_moment_standard_closed: requires q < 7/5");
    return 3.0 * (3.0 - q) * (3.0 - q) / ((5.0 - 3.0 * q) * (7.0 - 5.0 * q));
}

double eq_x_closed(const QGaussianParams& p)
{
    if (p.q < 1.0 - kClassicalBand || p.q >= 3.0)
        throw std::domain_error("eq_x_closed: requires 1 <= q < 3");
    return p.m * std::pow(3.0 - p.q, 0.5 * (3.0 - p.q))
           / (2.0 * std::pow(p.sigma * c_q(p.q), p.q - 1.0));
}

double e2qm1_x2_closed(const QGaussianParams& p)
{
    if (p.q < 1.0 - kClassicalBand || p.q >= 3.0)
        throw std::domain_error("e2qm1_x2_closed: requires 1 <= q < 3");
    const double q = p.q;
    const double num = (3.0 - q) * p.sigma2 + (q + 1.0) * p.m * p.m;
    const double den = 4.0 * q * std::pow(3.0 - q, q - 2.0) * std::pow(p.sigma * c_q(q), 2.0 * q - 2.0);
    return num / den;
}

double normalized_mean(const QGaussianParams& p)
{
    if (!(p.q > 0.0))
        throw std::domain_error("normalized_mean: requires q > 0 (escort power q)");
    return p.m;
}

double normalized_q_variance(const QGaussianParams& p)
{
    if (!(p.q > 0.5))
        throw std::domain_error("normalized_q_variance: requires q > 1/2 (escort power 2q-1)");
    return (3.0 - p.q) / (p.q + 1.0) * p.sigma2;
}

double normalized_kurtosis(double q)
{
    // window validated against the escort oracle: the fourth-moment escort
    // power 4q-3 must be positive and its image index below 3
    if (!(q > 0.75 && q < 3.0))
        throw std::domain_error("normalized_kurtosis: requires 3/4 < q < 3");
    return 3.0 * (q + 1.0) * (q + 1.0) / ((5.0 * q - 3.0) * (3.0 * q - 1.0));
}

MomentReport moment_report(std::string name, double closed, const QuadratureResult& oracle)
{
    MomentReport r;
    r.name = std::move(name);
    r.closed_form = closed;
    r.oracle = oracle.value;
    r.oracle_converged = oracle.converged;
    if (std::isfinite(closed) && std::isfinite(oracle.value)) {
        r.abs_err = std::fabs(closed - oracle.value);
        const double scale = std::max(std::fabs(closed), std::fabs(oracle.value));
        r.rel_err = scale > 0.0 ? r.abs_err / scale : 0.0;
    } else {
        r.abs_err = r.rel_err = std::numeric_limits<double>::quiet_NaN();
    }
    return r;
}

} // namespace qstat
