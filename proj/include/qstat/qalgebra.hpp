#pragma once

#include <cmath>

// Deformed exponential/logarithm pair and the arithmetic they exchange.
// Conventions, fixed once and verified by the identity suites in verify.cpp:
//
//   e_q(x)   = [1 + (1-q)x]_+^{1/(1-q)}        (exp(x) at q = 1)
//   ln_q(x)  = (x^{1-q} - 1)/(1-q)             (log(x) at q = 1)
//   x (+) y  = x + y + (1-q)xy
//   x (*) y  = [x^{1-q} + y^{1-q} - 1]_+^{1/(1-q)}
//
// The outer exponent of (*) is 1/(1-q), not 1-q: only that choice makes the
// exchange laws e_q(x)e_q(y) = e_q(x (+) y) and e_q(x) (*) e_q(y) = e_q(x+y)
// hold, which is how the convention is certified at runtime.
//
// For q > 1, e_q diverges where the bracket hits zero; beyond that point the
// value is reported as +infinity so every downstream integrand sees a total
// function. For q < 1 the bracket cutoff gives 0.

namespace qstat {

// |q-1| below this routes to the exact classical branch (plain exp/log/+/*).
inline constexpr double kClassicalBand = 1e-12;

inline bool classical(double q) { return std::fabs(q - 1.0) < kClassicalBand; }

double q_exp(double q, double x);
double q_log(double q, double x);                 // x > 0
double q_sum(double q, double x, double y);
double q_neg(double q, double x);                 // additive inverse; pole at 1+(1-q)x = 0
double q_prod(double q, double x, double y);      // x, y > 0
double q_inv(double q, double x);                 // x > 0
double q_sum_fold(double q, double t, int n);     // t (+) t (+) ... n times
double q_prod_fold(double q, double t, int n);    // t (*) t (*) ... n times, t > 0

} // namespace qstat
