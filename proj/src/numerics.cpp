#include "qstat/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qstat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Gauss-Kronrod 7/15 abscissae and weights (positive half).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
    double a, b, value, err;
};

// One 15-point Kronrod pass with embedded 7-point Gauss error estimate.
Segment gk15(const std::function<double(double)>& f, double a, double b, int& evals)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    evals += 15;

    double k15 = kWgk[7] * fv[7];
    for (int i = 0; i < 7; ++i)
        k15 += kWgk[i] * (fv[i] + fv[14 - i]);
    double g7 = kWg[3] * fv[7];
    for (int i = 0; i < 3; ++i)
        g7 += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    k15 *= h;
    g7 *= h;

    double d = std::fabs(k15 - g7);
    // standard scaled estimate; capped by the raw difference itself
    double e = 200.0 * d;
    e = std::min(d, e * std::sqrt(e));
    if (!std::isfinite(k15))
        e = kInf;
    return {a, b, k15, e};
}

QuadratureResult adapt(const std::function<double(double)>& f, double a, double b, double tol)
{
    QuadratureResult r;
    std::vector<Segment> segs;
    segs.push_back(gk15(f, a, b, r.evaluations));

    const int max_segments = 4000;
    while (true) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err += segs[i].err;
            if (segs[i].err > segs[worst].err)
                worst = i;
        }
        r.value = total;
        r.error_estimate = err;
        if (err <= tol) {
            r.converged = true;
            return r;
        }
        if (segs.size() >= static_cast<std::size_t>(max_segments))
            return r; // converged stays false
        const Segment s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b)
            return r; // interval exhausted at double precision
        segs[worst] = gk15(f, s.a, mid, r.evaluations);
        segs.push_back(gk15(f, mid, s.b, r.evaluations));
    }
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double tol)
{
    if (!(a < b))
        throw std::invalid_argument("integrate: requires a < b");
    const bool inf_a = std::isinf(a), inf_b = std::isinf(b);
    if (!inf_a && !inf_b)
        return adapt(f, a, b, tol);
    if (inf_a && inf_b) {
        // x = t/(1-t^2), dx = (1+t^2)/(1-t^2)^2 dt, t in (-1,1)
        auto g = [&f](double t) {
            const double s = 1.0 - t * t;
            return f(t / s) * (1.0 + t * t) / (s * s);
        };
        return adapt(g, -1.0, 1.0, tol);
    }
    if (!inf_a) {
        // x = a + u/(1-u), u in (0,1)
        auto g = [&f, a](double u) {
            const double s = 1.0 - u;
            return f(a + u / s) / (s * s);
        };
        return adapt(g, 0.0, 1.0, tol);
    }
    // x = b - u/(1-u)
    auto g = [&f, b](double u) {
        const double s = 1.0 - u;
        return f(b - u / s) / (s * s);
    };
    return adapt(g, 0.0, 1.0, tol);
}

QuadratureResult integrate_algebraic_tail(const std::function<double(double)>& f, double T,
                                          double s, double tol)
{
    if (!(T > 0.0) || !(s > 1.0))
        throw std::invalid_argument("integrate_algebraic_tail: requires T > 0 and s > 1");
    const double nu = s - 1.0;
    const double umax = std::pow(T, -nu);
    if (!(umax > 0.0)) {
        // the whole tail sits beyond representable x; nothing left to sum
        QuadratureResult r;
        r.converged = true;
        return r;
    }
    auto g = [&f, nu](double u) {
        const double x = std::pow(u, -1.0 / nu);
        if (!std::isfinite(x))
            return 0.0;
        const double v = f(x);
        if (v == 0.0)
            return 0.0;
        // u^{-1-1/nu} = x/u
        return v * x / (nu * u);
    };
    return adapt(g, 0.0, umax, tol);
}

double differentiate_n(const std::function<double(double)>& f, double x0, int n, double h)
{
    if (n < 1 || n > 4)
        throw std::invalid_argument("differentiate_n: n must be in 1..4");
    if (h <= 0.0)
        h = std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (n + 2)) * (1.0 + std::fabs(x0));

    auto stencil = [&f, x0, n](double s) {
        switch (n) {
        case 1:
            return (f(x0 + s) - f(x0 - s)) / (2.0 * s);
        case 2:
            return (f(x0 + s) - 2.0 * f(x0) + f(x0 - s)) / (s * s);
        case 3:
            return (f(x0 + 2.0 * s) - 2.0 * f(x0 + s) + 2.0 * f(x0 - s) - f(x0 - 2.0 * s)) / (2.0 * s * s * s);
        default:
            return (f(x0 + 2.0 * s) - 4.0 * f(x0 + s) + 6.0 * f(x0) - 4.0 * f(x0 - s) + f(x0 - 2.0 * s))
                   / (s * s * s * s);
        }
    };
    // stencils are O(h^2); one Richardson step lifts them to O(h^4)
    const double d1 = stencil(h);
    const double d2 = stencil(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol)
{
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("find_root: no sign change on bracket");

    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        // secant proposal, clipped into the middle 90% of the bracket
        double x = lo - flo * (hi - lo) / (fhi - flo);
        const double margin = 0.05 * (hi - lo);
        x = std::clamp(x, lo + margin, hi - margin);
        if (it % 2 == 1)
            x = 0.5 * (lo + hi); // periodic bisection guarantees progress
        const double fx = f(x);
        if (fx == 0.0)
            return x;
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace qstat
