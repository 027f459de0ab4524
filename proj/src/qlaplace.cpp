#include "qstat/qlaplace.hpp"

#include <cmath>
#include <stdexcept>

#include "qstat/qalgebra.hpp"

namespace qstat {

namespace {

void require_q_window(double q, const char* who)
{
    if (q < 1.0 - kClassicalBand || q >= 3.0)
        throw std::domain_error(std::string(who) + ": requires 1 <= q < 3");
}

// x f(x)^{q-1} is the argument scale of the deformed exponential inside the
// transform; for q > 1 its extrema over the line sit at
// x = +-sqrt(m^2 + sigma^2/((q-1) beta)), which gives a cheap exact pole
// screen before any quadrature is attempted.
bool pole_crossed(const QGaussianParams& p, double theta)
{
    if (p.q <= 1.0 + kClassicalBand)
        return false;
    const double xs = std::sqrt(p.m * p.m + p.sigma2 / ((p.q - 1.0) * p.beta));
    for (const double x : {xs, -xs}) {
        const double u = theta * x * std::pow(pdf(p, x), p.q - 1.0);
        if (1.0 + (1.0 - p.q) * u <= 0.0)
            return true;
    }
    return false;
}

} // namespace

LaplaceEval laplace_oracle(const QGaussianParams& p, double theta, double tol)
{
    require_q_window(p.q, "laplace_oracle");
    LaplaceEval ev;
    ev.theta = theta;
    ev.method = LaplaceEval::Method::oracle;
    if (pole_crossed(p, theta)) {
        ev.converged = false;
        return ev;
    }
    const double q = p.q;
    auto f = [&p, q, theta](double x) {
        const double d = pdf(p, x);
        if (d <= 0.0)
            return 0.0;
        return d * q_exp(q, theta * x * std::pow(d, q - 1.0));
    };
    const auto r = integrate(f, p.support_lo, p.support_hi, tol);
    ev.value = r.value;
    ev.converged = r.converged;
    return ev;
}

LaplaceEval laplace_oracle_fn(const std::function<double(double)>& density, double lo, double hi,
                              double q, double theta, double tol)
{
    require_q_window(q, "laplace_oracle_fn");
    LaplaceEval ev;
    ev.theta = theta;
    ev.method = LaplaceEval::Method::oracle;
    auto f = [&density, q, theta](double x) {
        const double d = density(x);
        if (d <= 0.0)
            return 0.0;
        return d * q_exp(q, theta * x * std::pow(d, q - 1.0));
    };
    const auto r = integrate(f, lo, hi, tol);
    ev.value = r.value;
    ev.converged = r.converged;
    return ev;
}

LaplaceEval laplace_closed(const QGaussianParams& p, double theta, int quad_sign)
{
    require_q_window(p.q, "laplace_closed");
    const double q = p.q;
    const double aq = std::pow(p.a, q - 1.0);
    const double E = theta * p.m * aq
                     + quad_sign * theta * theta * aq * aq * p.sigma2 / (4.0 * p.beta);
    const double base = q_exp(q, E);
    if (std::isinf(base))
        throw std::domain_error("laplace_closed: deformed exponential pole crossed");
    LaplaceEval ev;
    ev.theta = theta;
    ev.method = LaplaceEval::Method::closed_form;
    ev.value = std::pow(base, 0.5 * (3.0 - q));
    return ev;
}

MomentReport derivative_ladder_check(const QGaussianParams& p, int n)
{
    require_q_window(p.q, "derivative_ladder_check");
    if (n < 1 || n > 4)
        throw std::invalid_argument("derivative_ladder_check: n must be in 1..4");
    const double q = p.q;

    double coeff = 1.0;
    for (int k = 0; k < n; ++k)
        coeff *= 1.0 + k * (q - 1.0);
    const auto mom = unnormalized_q_moment(p, n, 1.0 + n * (q - 1.0), 1e-11);
    QuadratureResult rhs = mom;
    rhs.value *= coeff;

    // the differentiated function is quadrature-valued (noise ~1e-12), so
    // larger steps than the smooth-function default are needed for n >= 3
    const double h = (n <= 2 ? 1e-2 : 8e-2);
    auto L = [&p](double th) { return laplace_oracle(p, th, 1e-13).value; };
    const double lhs = differentiate_n(L, 0.0, n, h);

    MomentReport rep = moment_report("derivative-ladder n=" + std::to_string(n), lhs, rhs);
    return rep;
}

QGaussianParams sum_params(const QGaussianParams& p1, const QGaussianParams& p2)
{
    if (p1.q != p2.q)
        throw std::invalid_argument("sum_params: mismatched q");
    return make_params(p1.q, p1.m + p2.m, p1.sigma2 + p2.sigma2);
}

double q_independence_residual(const QGaussianParams& p1, const QGaussianParams& p2, double theta)
{
    if (p1.q != p2.q)
        throw std::invalid_argument("q_independence_residual: mismatched q");
    const QGaussianParams ps = sum_params(p1, p2);
    const double l1 = laplace_closed(p1, theta).value;
    const double l2 = laplace_closed(p2, theta).value;
    const double ls = laplace_closed(ps, theta).value;
    return std::fabs(ls - q_prod(p1.q, l1, l2));
}

double q_independence_residual_deformed(const QGaussianParams& p1, const QGaussianParams& p2,
                                        double theta)
{
    if (p1.q != p2.q)
        throw std::invalid_argument("q_independence_residual_deformed: mismatched q");
    const double q = p1.q;
    if (q >= 2.0)
        throw std::domain_error("q_independence_residual_deformed: requires q < 2");
    const double e = 2.0 - q;
    const double s2z = std::pow(std::pow(p1.sigma2, e) + std::pow(p2.sigma2, e), 1.0 / e);
    const QGaussianParams pz = make_params(q, p1.m + p2.m, s2z);
    const double q1 = (1.0 + q) / (3.0 - q);
    const double l1 = laplace_closed(p1, theta).value;
    const double l2 = laplace_closed(p2, theta).value;
    const double lz = laplace_closed(pz, theta).value;
    return std::fabs(lz - q_prod(q1, l1, l2));
}

} // namespace qstat
