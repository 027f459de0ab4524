#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Runtime re-verification of every closed form against the independent
// oracles, plus the named adjudications of the formula-inventory
// discrepancies (deformed-product exponent, negation sign, transform
// quadratic-term sign, normalized-kurtosis window, interval z-source,
// sum-factorization). Checks that measure a claim known to be false FAIL
// loudly with both values; nothing is corrected silently.

namespace qstat {

struct VerifyEntry {
    std::string name;   // stable check id, e.g. "variance q=1.3"
    std::string locus;  // formula-inventory label the check adjudicates
    double closed = 0.0;
    double oracle = 0.0;
    double tol = 0.0;
    std::string status; // PASS | FAIL | SKIPPED-divergent
    std::string note;
};

struct VerifyOptions {
    std::vector<double> q_grid; // empty = per-suite defaults
    // strictness scale: every gate tolerance is divided by this, so values
    // below 1 loosen the suite and values above 1 tighten it; must be positive
    double tol_scale = 1.0;
    std::uint64_t seed = 12345;
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    std::uint64_t seed = 0;
    std::string version;
    int pass = 0, fail = 0, skipped = 0;
};

void verify_algebra(const VerifyOptions& opt, std::vector<VerifyEntry>& out);
void verify_special(const VerifyOptions& opt, std::vector<VerifyEntry>& out);
void verify_numerics(const VerifyOptions& opt, std::vector<VerifyEntry>& out);
void verify_qgaussian(const VerifyOptions& opt, std::vector<VerifyEntry>& out);
void verify_sampler(const VerifyOptions& opt, std::vector<VerifyEntry>& out);
void verify_moments(const VerifyOptions& opt, std::vector<VerifyEntry>& out);
void verify_laplace(const VerifyOptions& opt, std::vector<VerifyEntry>& out);
void verify_independence(const VerifyOptions& opt, std::vector<VerifyEntry>& out);
void verify_estimators(const VerifyOptions& opt, std::vector<VerifyEntry>& out);
void verify_errata(const VerifyOptions& opt, std::vector<VerifyEntry>& out);

VerifyReport run_verify(const VerifyOptions& opt = {});

} // namespace qstat
