#pragma once

// Special functions backing the q-Gaussian normalizer: Lanczos log-gamma,
// Beta in log space, and the piecewise normalizing constant
//
//   c_q(q) = integral of e_q(-x^2) over the real line
//          = sqrt(1/(1-q)) * B((2-q)/(1-q), 1/2)      q < 1
//          = sqrt(pi)                                 q = 1
//          = sqrt(1/(q-1)) * B((3-q)/(2(q-1)), 1/2)   1 < q < 3

namespace qstat {

double log_gamma(double x);              // x > 0
double beta_fn(double a, double b);      // a, b > 0
double c_q(double q);                    // q < 3

} // namespace qstat
