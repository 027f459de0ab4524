#include "qstat/qalgebra.hpp"

#include <limits>
#include <stdexcept>

namespace qstat {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// b^{1/(1-q)} with the cutoff/pole convention, b the already-formed bracket.
double bracket_pow(double q, double b)
{
    if (b > 0.0)
        return std::exp(std::log(b) / (1.0 - q));
    return q < 1.0 ? 0.0 : kInf;
}
} // namespace

double q_exp(double q, double x)
{
    if (classical(q))
        return std::exp(x);
    const double u = (1.0 - q) * x;
    if (u > -1.0)
        return std::exp(std::log1p(u) / (1.0 - q));
    // bracket <= 0: cutoff below q=1, pole convention above
    return q < 1.0 ? 0.0 : kInf;
}

double q_log(double q, double x)
{
    if (x <= 0.0)
        throw std::domain_error("q_log: argument must be positive");
    if (classical(q))
        return std::log(x);
    return std::expm1((1.0 - q) * std::log(x)) / (1.0 - q);
}

double q_sum(double q, double x, double y)
{
    if (classical(q))
        return x + y;
    return x + y + (1.0 - q) * x * y;
}

double q_neg(double q, double x)
{
    if (classical(q))
        return -x;
    const double den = 1.0 + (1.0 - q) * x;
    if (den == 0.0)
        throw std::domain_error("q_neg: pole at 1+(1-q)x = 0");
    return -x / den;
}

double q_prod(double q, double x, double y)
{
    if (x <= 0.0 || y <= 0.0)
        throw std::domain_error("q_prod: operands must be positive");
    if (classical(q))
        return x * y;
    const double e = 1.0 - q;
    return bracket_pow(q, std::pow(x, e) + std::pow(y, e) - 1.0);
}

double q_inv(double q, double x)
{
    if (x <= 0.0)
        throw std::domain_error("q_inv: argument must be positive");
    if (classical(q))
        return 1.0 / x;
    return bracket_pow(q, 2.0 - std::pow(x, 1.0 - q));
}

double q_sum_fold(double q, double t, int n)
{
    if (n < 1)
        throw std::domain_error("q_sum_fold: n must be >= 1");
    if (classical(q))
        return static_cast<double>(n) * t;
    const double b = 1.0 + (1.0 - q) * t;
    double bn = 1.0;
    for (int i = 0; i < n; ++i)
        bn *= b;
    return (bn - 1.0) / (1.0 - q);
}

double q_prod_fold(double q, double t, int n)
{
    if (t <= 0.0)
        throw std::domain_error("q_prod_fold: t must be positive");
    if (n < 1)
        throw std::domain_error("q_prod_fold: n must be >= 1");
    if (classical(q))
        return std::pow(t, n);
    const double e = 1.0 - q;
    return bracket_pow(q, n * std::pow(t, e) - (n - 1));
}

} // namespace qstat
