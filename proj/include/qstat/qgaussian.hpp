#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "qstat/numerics.hpp"

// The q-Gaussian family N_q(m, sigma^2), q < 3:
//
//   f(x) = a * e_q(-beta (x-m)^2 / sigma^2),  beta = 1/(3-q),
//   a    = sqrt(beta) / (sigma * c_q(q)).
//
// Support is the whole line for q >= 1 and
// [m - sigma/sqrt((1-q)beta), m + sigma/sqrt((1-q)beta)] for q < 1.
// For 1 < q < 3 the standard member N_q(0,1) coincides pointwise with the
// Student-t density with nu = (3-q)/(q-1) degrees of freedom, which is both
// a test invariant and the basis of the sampler.

namespace qstat {

// Deterministic across platforms: raw engine output is mapped to uniforms by
// hand, std::*_distribution is never used.
using RandomSource = std::mt19937_64;

struct CdfGrid; // internal: fixed cumulative-mass cache

struct QGaussianParams {
    double q = 1.0;
    double m = 0.0;
    double sigma2 = 1.0;
    // derived
    double beta = 0.5;       // 1/(3-q)
    double sigma = 1.0;
    double a = 0.0;          // pdf peak value
    double support_lo = 0.0; // -inf for q >= 1
    double support_hi = 0.0;
    std::shared_ptr<const CdfGrid> grid; // immutable after construction
};

// Image of pdf^p under the power map: pdf(q,m,sigma2)^p is proportional to
// the pdf of N_{q'}(m, sigma2'), q' = 1 - (1-q)/p, sigma2' = sigma2 b'/(p b).
struct EscortMap {
    double p = 1.0;
    double q_prime = 1.0;
    double sigma2_prime = 1.0;
};

QGaussianParams make_params(double q, double m, double sigma2);

double pdf(const QGaussianParams& p, double x);
double cdf(const QGaussianParams& p, double x);
double quantile(const QGaussianParams& p, double u); // 0 < u < 1

// i.i.d. draws: Box-Muller at q=1, scaled Student-t for 1<q<3, inverse-CDF
// on a cached cumulative table for q<1.
std::vector<double> sample(const QGaussianParams& p, RandomSource& rng, std::size_t n);

// Parameters of c + d*X.
QGaussianParams affine(const QGaussianParams& p, double c, double d);

// |e_q(-y^2) - (e_{2-1/q}(-q y^2))^{1/q}|, the index-duality identity.
double duality_residual(double q, double y);

EscortMap escort_map(const QGaussianParams& p, double power);

// nu_p = integral of pdf^power, closed form assembled from the escort map
// and the normalizing constants; the oracle version integrates directly.
// For q > 1 the oracle sums the algebraic tails in a substituted chart, so it
// stays honest even when the decay exponent is barely above 1 (q near 3).
double nu_p_closed(const QGaussianParams& p, double power);
QuadratureResult nu_p_oracle(const QGaussianParams& p, double power, double tol = 1e-10);

// Pure-quadrature check mass: integral of the pdf over its support.
QuadratureResult normalization_oracle(const QGaussianParams& p, double tol = 1e-10);

// Uniform in (0,1) and standard normal, both built on raw engine words.
double uniform01(RandomSource& rng);
double standard_normal(RandomSource& rng);

} // namespace qstat
