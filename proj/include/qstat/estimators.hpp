#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qstat/qgaussian.hpp"

// Sample statistics for data from N_q(m, sigma^2) under ordinary
// independence, q < 5/3 (finite-variance regime). The empirical variance
// uses the divide-by-n convention; its expectation is
//
//   E(S^2) = ((n-1)/n) ((3-q)/(5-3q)) sigma^2,
//
// so sigma2_hat = (n/(n-1)) ((5-3q)/(3-q)) S^2 is unbiased for sigma^2.
// Every experiment here draws ordinarily independent samples; the
// transform-level deformed independence has no sampling procedure, and the
// distinction is tested actively elsewhere (the convolution caveat check).

namespace qstat {

struct SampleStats {
    std::size_t n = 0;
    double mean = 0.0;
    double s2 = 0.0;         // 1/n convention
    double sigma2_hat = 0.0; // bias-corrected
    double q = 1.0;
};

struct ConfidenceInterval {
    double lo = 0.0;
    double hi = 0.0;
    double level = 0.0;
};

// Which quantile feeds the interval half-width. The normal choice keeps
// nominal coverage for the CLT-normal sample mean and is the default; the
// deformed-quantile variant over-covers (~97.6% at nominal 95%, q=1.2) and
// is retained for the errata record.
enum class ZSource { normal, qgaussian };

SampleStats summarize(std::span<const double> data, double q);

// X_bar +- z * sqrt((3-q)/(5-3q)) * sigma / sqrt(n), sigma^2 known.
ConfidenceInterval confidence_interval(const SampleStats& stats, double sigma2_known, double level,
                                       ZSource z_source = ZSource::normal);

struct BiasReport {
    std::size_t n = 0, reps = 0;
    std::uint64_t seed = 0;
    double s2_mean = 0.0, s2_se = 0.0, s2_target = 0.0, s2_dev_se = 0.0;
    double hat_mean = 0.0, hat_se = 0.0, hat_target = 0.0, hat_dev_se = 0.0;
    bool pass = false; // both deviations within 4 Monte Carlo standard errors
};

BiasReport bias_experiment(const QGaussianParams& p, std::size_t n, std::size_t reps,
                           RandomSource& rng);

struct LlnRow {
    std::size_t n = 0;
    double deviation = 0.0; // |X_bar_n - m|
    double gate = 0.0;      // 5 sqrt(V/n)
};

struct LlnReport {
    std::vector<LlnRow> rows;
    bool pass = false; // largest-n deviation under its gate
};

LlnReport lln_check(const QGaussianParams& p, std::span<const std::size_t> schedule,
                    RandomSource& rng);

struct CoverageReport {
    std::size_t n = 0, reps = 0;
    std::uint64_t seed = 0;
    double level = 0.0;
    double coverage = 0.0;
};

// Fraction of reps whose interval covers the true m; the quantile is hoisted
// out of the loop, everything else matches confidence_interval exactly.
CoverageReport coverage_experiment(const QGaussianParams& p, std::size_t n, std::size_t reps,
                                   double level, ZSource z_source, RandomSource& rng);

} // namespace qstat
