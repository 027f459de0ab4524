#pragma once

#include <string>

#include "qstat/numerics.hpp"
#include "qstat/qgaussian.hpp"

// Moments of N_q(m, sigma^2), each in two independent routes: the closed
// forms of the deformed-moment calculus, and quadrature oracles. The two
// routes only ever meet inside a MomentReport.
//
// Existence windows for the ordinary moments: E|X|^n < inf iff
// q < (n+3)/(n+1), so q < 5/3 for the variance and q < 7/5 for the fourth
// moment. Deformed (escort) moments stay finite well beyond.

namespace qstat {

struct MomentReport {
    std::string name;
    double closed_form = 0.0;
    double oracle = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool oracle_converged = false;
};

// integral of x^n pdf(x); divergence is pre-checked analytically from the
// tail exponent and reported via converged=false without integrating.
QuadratureResult raw_moment_oracle(const QGaussianParams& p, int n, double tol = 1e-9);

// integral of (x-m)^n pdf(x)
QuadratureResult central_moment_oracle(const QGaussianParams& p, int n, double tol = 1e-9);

// integral of x^n pdf(x)^power
QuadratureResult unnormalized_q_moment(const QGaussianParams& p, int n, double power,
                                       double tol = 1e-9);

// integral of (x-m)^n pdf(x)^power / nu_power  (escort expectation, centered
// at m; odd escort moments vanish by symmetry, which is tested separately)
QuadratureResult normalized_q_moment_oracle(const QGaussianParams& p, int n, double power,
                                            double tol = 1e-9);

double mean_closed(const QGaussianParams& p);            // m
double variance_closed(const QGaussianParams& p);        // (3-q)/(5-3q) sigma^2, q < 5/3
double kurtosis_closed(double q);                        // 3(5-3q)/(7-5q), q < 7/5
double fourth_moment_standard_closed(double q);          // E Y^4 for N_q(0,1)

// first deformed moment E_q(X) and second E_{2q-1}(X^2), closed forms
double eq_x_closed(const QGaussianParams& p);            // 1 <= q < 3
double e2qm1_x2_closed(const QGaussianParams& p);        // 1 <= q < 3

double normalized_mean(const QGaussianParams& p);        // m
double normalized_q_variance(const QGaussianParams& p);  // (3-q)/(q+1) sigma^2
double normalized_kurtosis(double q);                    // 3(q+1)^2/((5q-3)(3q-1)), 3/4 < q < 3

MomentReport moment_report(std::string name, double closed, const QuadratureResult& oracle);

} // namespace qstat
