#pragma once

#include <functional>

#include "qstat/moments.hpp"
#include "qstat/numerics.hpp"
#include "qstat/qgaussian.hpp"

// Deformed Laplace transform for 1 <= q < 3:
//
//   L_q(X)(theta) = integral of f(x) e_q(theta x f(x)^{q-1}) dx,
//
// the standard-product form of the deformed-product definition. For
// q-Gaussians it has the closed form
//
//   L_q = (e_q(E))^{(3-q)/2},  E = theta m a^{q-1} + theta^2 a^{2q-2} sigma^2/(4 beta),
//
// where the sign of the quadratic term is certified against the oracle at
// runtime (the minus variant is kept accessible for the errata report; it is
// wrong, already failing the classical q=1 MGF limit).

namespace qstat {

struct LaplaceEval {
    double theta = 0.0;
    double value = 0.0;
    enum class Method { oracle, closed_form } method = Method::closed_form;
    bool converged = true;
};

// Quadrature of the defining integral; reports divergence (converged=false)
// when theta pushes the deformed exponential over its pole inside the
// support, which happens for |theta| large and q > 1.
LaplaceEval laplace_oracle(const QGaussianParams& p, double theta, double tol = 1e-12);

// Same transform for an arbitrary density on (lo, hi); used by the
// nonlinearity witness, where mixtures must break additivity for q > 1.
LaplaceEval laplace_oracle_fn(const std::function<double(double)>& density, double lo, double hi,
                              double q, double theta, double tol = 1e-12);

// Certified closed form. quad_sign = -1 evaluates the refuted variant.
LaplaceEval laplace_closed(const QGaussianParams& p, double theta, int quad_sign = +1);

// d^n/dtheta^n L_q at 0 versus prod_{k=0}^{n-1}(1+k(q-1)) times the deformed
// moment integral of x^n f^{1+n(q-1)}.
MomentReport derivative_ladder_check(const QGaussianParams& p, int n);

// N_q(m1+m2, s1+s2): the composition rule under the transform-factorization
// notion of independence.
QGaussianParams sum_params(const QGaussianParams& p1, const QGaussianParams& p2);

// |L_q(sum) - L_q(X1) (x)_q L_q(X2)| with the plain deformed product at the
// shared index q. Exact at q = 1; structurally nonzero at order theta^2
// otherwise (see q_independence_residual_deformed for the identity that does
// close).
double q_independence_residual(const QGaussianParams& p1, const QGaussianParams& p2, double theta);

// The factorization that holds to machine precision: deformed product taken
// at the cascade index q1 = (1+q)/(3-q), with the variances combined by
// sigma_z^{2(2-q)} = sigma_1^{2(2-q)} + sigma_2^{2(2-q)}. Requires q < 2.
double q_independence_residual_deformed(const QGaussianParams& p1, const QGaussianParams& p2,
                                        double theta);

} // namespace qstat
