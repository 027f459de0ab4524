#include "qstat/estimators.hpp"

#include <cmath>
#include <stdexcept>

#include "qstat/moments.hpp"

namespace qstat {

namespace {
void require_variance_window(double q, const char* who)
{
    if (q >= 5.0 / 3.0)
        throw std::domain_error(std::string(who) + ": requires q < 5/3");
}

double z_quantile(double q, double level, ZSource z_source)
{
    const double u = 1.0 - 0.5 * (1.0 - level);
    const QGaussianParams ref =
        z_source == ZSource::normal ? make_params(1.0, 0.0, 1.0) : make_params(q, 0.0, 1.0);
    return quantile(ref, u);
}
} // namespace

SampleStats summarize(std::span<const double> data, double q)
{
    if (data.size() < 2)
        throw std::invalid_argument("summarize: need at least 2 observations");
    require_variance_window(q, "summarize");
    SampleStats st;
    st.n = data.size();
    st.q = q;
    double acc = 0.0;
    for (const double x : data)
        acc += x;
    st.mean = acc / st.n;
    acc = 0.0;
    for (const double x : data)
        acc += (x - st.mean) * (x - st.mean);
    st.s2 = acc / st.n;
    st.sigma2_hat = (static_cast<double>(st.n) / (st.n - 1.0))
                    * ((5.0 - 3.0 * q) / (3.0 - q)) * st.s2;
    return st;
}

ConfidenceInterval confidence_interval(const SampleStats& stats, double sigma2_known, double level,
                                       ZSource z_source)
{
    if (!(level > 0.0 && level < 1.0))
        throw std::domain_error("confidence_interval: level must be in (0,1)");
    if (!(sigma2_known > 0.0))
        throw std::domain_error("confidence_interval: sigma2_known must be positive");
    require_variance_window(stats.q, "confidence_interval");
    const double z = z_quantile(stats.q, level, z_source);
    const double sd_factor = std::sqrt((3.0 - stats.q) / (5.0 - 3.0 * stats.q));
    const double half = z * sd_factor * std::sqrt(sigma2_known) / std::sqrt(double(stats.n));
    return {stats.mean - half, stats.mean + half, level};
}

BiasReport bias_experiment(const QGaussianParams& p, std::size_t n, std::size_t reps,
                           RandomSource& rng)
{
    require_variance_window(p.q, "bias_experiment");
    if (n < 2 || reps < 2)
        throw std::invalid_argument("bias_experiment: need n >= 2 and reps >= 2");
    BiasReport rep;
    rep.n = n;
    rep.reps = reps;
    const double v = variance_closed(p);
    rep.s2_target = (n - 1.0) / n * v;
    rep.hat_target = p.sigma2;

    double sum = 0.0, sumsq = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
        const auto xs = sample(p, rng, n);
        const auto st = summarize(xs, p.q);
        sum += st.s2;
        sumsq += st.s2 * st.s2;
    }
    rep.s2_mean = sum / reps;
    const double var_s2 = (sumsq - sum * sum / reps) / (reps - 1.0);
    rep.s2_se = std::sqrt(var_s2 / reps);
    rep.s2_dev_se = std::fabs(rep.s2_mean - rep.s2_target) / rep.s2_se;

    const double corr = (static_cast<double>(n) / (n - 1.0)) * ((5.0 - 3.0 * p.q) / (3.0 - p.q));
    rep.hat_mean = corr * rep.s2_mean;
    rep.hat_se = corr * rep.s2_se;
    rep.hat_dev_se = std::fabs(rep.hat_mean - rep.hat_target) / rep.hat_se;

    rep.pass = rep.s2_dev_se <= 4.0 && rep.hat_dev_se <= 4.0;
    return rep;
}

LlnReport lln_check(const QGaussianParams& p, std::span<const std::size_t> schedule,
                    RandomSource& rng)
{
    require_variance_window(p.q, "lln_check");
    LlnReport rep;
    const double v = variance_closed(p);
    for (const std::size_t n : schedule) {
        const auto xs = sample(p, rng, n);
        double acc = 0.0;
        for (const double x : xs)
            acc += x;
        LlnRow row;
        row.n = n;
        row.deviation = std::fabs(acc / n - p.m);
        row.gate = 5.0 * std::sqrt(v / n);
        rep.rows.push_back(row);
    }
    rep.pass = !rep.rows.empty() && rep.rows.back().deviation < rep.rows.back().gate;
    return rep;
}

CoverageReport coverage_experiment(const QGaussianParams& p, std::size_t n, std::size_t reps,
                                   double level, ZSource z_source, RandomSource& rng)
{
    require_variance_window(p.q, "coverage_experiment");
    CoverageReport rep;
    rep.n = n;
    rep.reps = reps;
    rep.level = level;
    const double z = z_quantile(p.q, level, z_source);
    const double half =
        z * std::sqrt((3.0 - p.q) / (5.0 - 3.0 * p.q)) * p.sigma / std::sqrt(double(n));
    std::size_t hits = 0;
    for (std::size_t r = 0; r < reps; ++r) {
        const auto xs = sample(p, rng, n);
        double acc = 0.0;
        for (const double x : xs)
            acc += x;
        if (std::fabs(acc / n - p.m) <= half)
            ++hits;
    }
    rep.coverage = static_cast<double>(hits) / reps;
    return rep;
}

} // namespace qstat
