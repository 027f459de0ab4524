#include "qstat/qgaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qstat/errors.hpp"
#include "qstat/qalgebra.hpp"
#include "qstat/special.hpp"

namespace qstat {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double uniform01_open(RandomSource& rng)
{
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
}
} // namespace

double uniform01(RandomSource& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53; // [0, 1)
}

double standard_normal(RandomSource& rng)
{
    const double u1 = uniform01_open(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

// Fixed per-instance cumulative-mass cache: strictly increasing nodes with m
// in the middle, masses anchored at F(m) = 1/2 so the median is exact by
// construction. Immutable once built.
struct CdfGrid {
    std::vector<double> x;
    std::vector<double> F;
    std::size_t mid = 0;
};

namespace {

double pdf_raw(double q, double m, double sigma2, double a, double x)
{
    const double d = x - m;
    const double w = (d * d) / ((3.0 - q) * sigma2);
    if (q > 1.0 && !std::isfinite(w)) {
        // (x-m)^2 overflowed; the algebraic tail is still far from underflow,
        // so evaluate it in log space (exact to machine precision out here)
        const double lp = std::log(a)
                          - (std::log((q - 1.0) / ((3.0 - q) * sigma2))
                             + 2.0 * std::log(std::fabs(d)))
                                / (q - 1.0);
        return std::exp(lp);
    }
    return a * q_exp(q, -w);
}

std::shared_ptr<const CdfGrid> build_grid(const QGaussianParams& p)
{
    auto g = std::make_shared<CdfGrid>();
    const int nseg = 192; // even, so m lands on a node
    g->x.resize(nseg + 1);
    if (p.q < 1.0 && !classical(p.q)) {
        const double lo = p.support_lo, hi = p.support_hi;
        for (int k = 0; k <= nseg; ++k)
            g->x[k] = lo + (hi - lo) * k / nseg;
    } else {
        // x = m + sigma * t/(1-t^2) on a uniform interior t-grid; the two
        // outermost masses are finished by tail integrals at lookup time
        for (int k = 0; k <= nseg; ++k) {
            const double t = -1.0 + 2.0 * (k + 1.0) / (nseg + 2.0);
            g->x[k] = p.m + p.sigma * t / (1.0 - t * t);
        }
    }
    g->mid = nseg / 2;
    g->x[g->mid] = p.m;

    auto f = [&p](double x) { return pdf(p, x); };
    std::vector<double> seg(nseg);
    for (int k = 0; k < nseg; ++k)
        seg[k] = integrate(f, g->x[k], g->x[k + 1], 1e-13).value;

    g->F.assign(nseg + 1, 0.0);
    g->F[g->mid] = 0.5;
    for (std::size_t k = g->mid; k < static_cast<std::size_t>(nseg); ++k)
        g->F[k + 1] = std::min(1.0, g->F[k] + seg[k]);
    for (std::size_t k = g->mid; k-- > 0;)
        g->F[k] = std::max(0.0, g->F[k + 1] - seg[k]);
    return g;
}

} // namespace

QGaussianParams make_params(double q, double m, double sigma2)
{
    if (q >= 3.0)
        throw std::domain_error("q must be < 3 (density not normalizable)");
    if (!(sigma2 > 0.0))
        throw std::domain_error("sigma2 must be positive");
    QGaussianParams p;
    p.q = q;
    p.m = m;
    p.sigma2 = sigma2;
    p.beta = 1.0 / (3.0 - q);
    p.sigma = std::sqrt(sigma2);
    p.a = std::sqrt(p.beta) / (p.sigma * c_q(q));
    if (q < 1.0 && !classical(q)) {
        const double half = p.sigma / std::sqrt((1.0 - q) * p.beta);
        p.support_lo = m - half;
        p.support_hi = m + half;
    } else {
        p.support_lo = -kInf;
        p.support_hi = kInf;
    }
    p.grid = build_grid(p);
    return p;
}

double pdf(const QGaussianParams& p, double x)
{
    if (x < p.support_lo || x > p.support_hi)
        return 0.0;
    return pdf_raw(p.q, p.m, p.sigma2, p.a, x);
}

double cdf(const QGaussianParams& p, double x)
{
    if (x <= p.support_lo)
        return 0.0;
    if (x >= p.support_hi)
        return 1.0;
    const auto& g = *p.grid;
    auto f = [&p](double t) { return pdf(p, t); };
    // beyond the cached nodes: tail mass by quadrature; for q > 1 in the
    // u = z^{-(s-1)} chart, which stays accurate when the decay is slow
    if (x < g.x.front()) {
        double tail;
        if (p.q > 1.0)
            tail = integrate_algebraic_tail([&p](double z) { return pdf(p, p.m - z); }, p.m - x,
                                            2.0 / (p.q - 1.0), 1e-13)
                       .value;
        else
            tail = integrate(f, -kInf, x, 1e-13).value;
        return std::max(0.0, tail);
    }
    if (x > g.x.back()) {
        double tail;
        if (p.q > 1.0)
            tail = integrate_algebraic_tail([&p](double z) { return pdf(p, p.m + z); }, x - p.m,
                                            2.0 / (p.q - 1.0), 1e-13)
                       .value;
        else
            tail = integrate(f, x, kInf, 1e-13).value;
        return std::min(1.0, 1.0 - tail);
    }
    const auto it = std::upper_bound(g.x.begin(), g.x.end(), x);
    const std::size_t k = static_cast<std::size_t>(it - g.x.begin()) - 1;
    if (x == g.x[k])
        return g.F[k];
    return std::clamp(g.F[k] + integrate(f, g.x[k], x, 1e-13).value, 0.0, 1.0);
}

double quantile(const QGaussianParams& p, double u)
{
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("quantile: u must be in (0,1)");
    if (u == 0.5)
        return p.m;
    const auto& g = *p.grid;
    auto h = [&p, u](double x) { return cdf(p, x) - u; };

    double lo, hi;
    if (u < g.F.front()) {
        // deep left tail beyond the cached nodes (q >= 1 only)
        hi = g.x.front();
        double step = std::max(p.sigma, p.m - hi);
        lo = hi - step;
        for (int i = 0; cdf(p, lo) > u; ++i) {
            if (i > 200)
                throw convergence_error("quantile: tail bracket search failed");
            step *= 2.0;
            lo -= step;
        }
    } else if (u > g.F.back()) {
        lo = g.x.back();
        double step = std::max(p.sigma, lo - p.m);
        hi = lo + step;
        for (int i = 0; cdf(p, hi) < u; ++i) {
            if (i > 200)
                throw convergence_error("quantile: tail bracket search failed");
            step *= 2.0;
            hi += step;
        }
    } else {
        const auto it = std::lower_bound(g.F.begin(), g.F.end(), u);
        std::size_t k = static_cast<std::size_t>(it - g.F.begin());
        if (k == 0)
            k = 1;
        lo = g.x[k - 1];
        hi = g.x[k];
    }
    const double tol = 1e-12 * (1.0 + std::fabs(lo) + std::fabs(hi));
    return find_root(h, lo, hi, tol);
}

namespace {

// Marsaglia-Tsang gamma, unit scale; the alpha < 1 case is boosted.
double gamma_variate(RandomSource& rng, double alpha)
{
    if (alpha < 1.0)
        return gamma_variate(rng, alpha + 1.0) * std::pow(uniform01_open(rng), 1.0 / alpha);
    const double d = alpha - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        double x, v;
        do {
            x = standard_normal(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01_open(rng);
        if (u < 1.0 - 0.0331 * x * x * x * x)
            return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

// Inverse-CDF table for q < 1: equal-width segments over the region holding
// all but a ~1e-30 sliver of mass, cumulative masses by quadrature, inverted
// per draw with a safeguarded Newton on the monotone cubic interpolant.
struct InverseTable {
    std::vector<double> x, F, f;

    explicit InverseTable(const QGaussianParams& p)
    {
        const double s = p.sigma * std::sqrt((3.0 - p.q) / (5.0 - 3.0 * p.q));
        const double lo = std::max(p.support_lo, p.m - 12.0 * s);
        const double hi = std::min(p.support_hi, p.m + 12.0 * s);
        const int nseg = 1024;
        x.resize(nseg + 1);
        f.resize(nseg + 1);
        for (int k = 0; k <= nseg; ++k) {
            x[k] = lo + (hi - lo) * k / nseg;
            f[k] = pdf(p, x[k]);
        }
        F.assign(nseg + 1, 0.0);
        auto dens = [&p](double t) { return pdf(p, t); };
        for (int k = 0; k < nseg; ++k)
            F[k + 1] = F[k] + integrate(dens, x[k], x[k + 1], 1e-12).value;
        const double total = F.back();
        for (auto& v : F)
            v /= total;
        for (auto& v : f)
            v *= (hi - lo) / 1024.0 / total; // slope of F in segment-local units
    }

    double invert(double u) const
    {
        const auto it = std::upper_bound(F.begin(), F.end(), u);
        std::size_t k = static_cast<std::size_t>(it - F.begin());
        k = std::clamp<std::size_t>(k, 1, F.size() - 1) - 1;
        const double F0 = F[k], F1 = F[k + 1], d0 = f[k], d1 = f[k + 1];
        double a = 0.0, b = 1.0, t = (u - F0) / std::max(F1 - F0, 1e-300);
        for (int it2 = 0; it2 < 16; ++it2) {
            const double t2 = t * t, t3 = t2 * t;
            const double H = (2 * t3 - 3 * t2 + 1) * F0 + (t3 - 2 * t2 + t) * d0
                             + (-2 * t3 + 3 * t2) * F1 + (t3 - t2) * d1;
            const double Hp = (6 * t2 - 6 * t) * F0 + (3 * t2 - 4 * t + 1) * d0
                              + (-6 * t2 + 6 * t) * F1 + (3 * t2 - 2 * t) * d1;
            const double r = H - u;
            if (std::fabs(r) < 1e-15)
                break;
            if (r > 0)
                b = t;
            else
                a = t;
            t = (Hp > 1e-300) ? t - r / Hp : 0.5 * (a + b);
            if (t <= a || t >= b)
                t = 0.5 * (a + b);
        }
        return x[k] + (x[k + 1] - x[k]) * t;
    }
};

} // namespace

std::vector<double> sample(const QGaussianParams& p, RandomSource& rng, std::size_t n)
{
    std::vector<double> out;
    out.reserve(n);
    if (classical(p.q)) {
        while (out.size() < n) {
            const double u1 = uniform01_open(rng);
            const double u2 = uniform01(rng);
            const double r = std::sqrt(-2.0 * std::log(u1));
            out.push_back(p.m + p.sigma * r * std::cos(kTwoPi * u2));
            if (out.size() < n)
                out.push_back(p.m + p.sigma * r * std::sin(kTwoPi * u2));
        }
        return out;
    }
    if (p.q > 1.0) {
        // N_q(0,1) is exactly Student-t with nu = (3-q)/(q-1)
        const double nu = (3.0 - p.q) / (p.q - 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double z = standard_normal(rng);
            const double g = gamma_variate(rng, 0.5 * nu);
            out.push_back(p.m + p.sigma * z * std::sqrt(0.5 * nu / g));
        }
        return out;
    }
    const InverseTable table(p);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(table.invert(uniform01_open(rng)));
    return out;
}

QGaussianParams affine(const QGaussianParams& p, double c, double d)
{
    if (d == 0.0)
        throw std::invalid_argument("affine: scale d must be nonzero");
    return make_params(p.q, c + d * p.m, d * d * p.sigma2);
}

double duality_residual(double q, double y)
{
    if (q == 0.0)
        throw std::domain_error("duality_residual: q must be nonzero");
    const double lhs = q_exp(q, -y * y);
    const double rhs = std::pow(q_exp(2.0 - 1.0 / q, -q * y * y), 1.0 / q);
    return std::fabs(lhs - rhs);
}

EscortMap escort_map(const QGaussianParams& p, double power)
{
    if (!(power > 0.0))
        throw std::domain_error("escort_map: power must be positive");
    EscortMap em;
    em.p = power;
    em.q_prime = 1.0 - (1.0 - p.q) / power;
    if (em.q_prime >= 3.0)
        throw std::domain_error("escort_map: image index must be < 3");
    const double beta_prime = 1.0 / (3.0 - em.q_prime);
    em.sigma2_prime = p.sigma2 * beta_prime / (power * p.beta);
    return em;
}

double nu_p_closed(const QGaussianParams& p, double power)
{
    const EscortMap em = escort_map(p, power);
    const double beta_prime = 1.0 / (3.0 - em.q_prime);
    const double a_prime = std::sqrt(beta_prime) / (std::sqrt(em.sigma2_prime) * c_q(em.q_prime));
    return std::pow(p.a, power) / a_prime;
}

QuadratureResult nu_p_oracle(const QGaussianParams& p, double power, double tol)
{
    if (p.q > 1.0 && 2.0 * power / (p.q - 1.0) <= 1.0 + 1e-12) {
        // tail exponent check: pdf^power decays like |x|^{-2 power/(q-1)}
        QuadratureResult r;
        r.error_estimate = kInf;
        return r;
    }
    auto f = [&p, power](double x) { return std::pow(pdf(p, x), power); };
    if (p.q <= 1.0 || classical(p.q))
        return integrate(f, p.support_lo, p.support_hi, tol);
    // bulk window plus algebraic tails, robust down to decay exponents near 1
    const double T = 10.0 * p.sigma / std::sqrt((p.q - 1.0) * p.beta);
    const double s = 2.0 * power / (p.q - 1.0);
    const auto bulk = integrate(f, p.m - T, p.m + T, 0.5 * tol);
    const auto right =
        integrate_algebraic_tail([&f, &p](double z) { return f(p.m + z); }, T, s, 0.25 * tol);
    const auto left =
        integrate_algebraic_tail([&f, &p](double z) { return f(p.m - z); }, T, s, 0.25 * tol);
    QuadratureResult r;
    r.value = bulk.value + right.value + left.value;
    r.error_estimate = bulk.error_estimate + right.error_estimate + left.error_estimate;
    r.evaluations = bulk.evaluations + right.evaluations + left.evaluations;
    r.converged = bulk.converged && right.converged && left.converged;
    return r;
}

QuadratureResult normalization_oracle(const QGaussianParams& p, double tol)
{
    return nu_p_oracle(p, 1.0, tol);
}

} // namespace qstat
