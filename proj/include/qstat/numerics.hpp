#pragma once

#include <functional>

// Verification oracle: adaptive Gauss-Kronrod quadrature (finite and
// infinite intervals), Richardson-extrapolated finite differences, and
// bracketed scalar root finding. Everything here is deliberately independent
// of the closed forms it is used to check.

namespace qstat {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
    bool converged = false;
};

// Integrate f over (a, b); either endpoint may be +-infinity. Infinite
// intervals are mapped onto finite ones with x = t/(1-t^2) (both ends) or
// x = a + u/(1-u) (one end); the Kronrod nodes never touch the endpoints, so
// the Jacobian singularity is never evaluated. Non-convergence is reported
// through the flag, never as a silent wrong value.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double tol);

// Integrate f over [T, +inf) for an f that decays algebraically, f ~ C x^{-s}
// with s > 1. The substitution u = x^{-(s-1)} turns the tail into a bounded
// integrand on (0, T^{-(s-1)}], which matters when s is barely above 1: the
// generic maps then lose mass that sits beyond the largest representable x.
// Left tails: reflect f before calling.
QuadratureResult integrate_algebraic_tail(const std::function<double(double)>& f, double T,
                                          double s, double tol);

// n-th derivative (n in 1..4) by central differences with one Richardson
// step. h = 0 picks eps^{1/(n+2)} * (1 + |x0|).
double differentiate_n(const std::function<double(double)>& f, double x0, int n, double h = 0.0);

// Root of f in [lo, hi]; requires a sign change. Bisection-safeguarded
// interpolation; stops when the bracket is narrower than tol or f hits 0.
double find_root(const std::function<double(double)>& f, double lo, double hi, double tol);

} // namespace qstat
