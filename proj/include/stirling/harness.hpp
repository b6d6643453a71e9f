#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stirling/rng.hpp"

namespace stirling {

enum class OutFormat { csv, jsonl };

// R >= 1, n >= 1; identical config gives byte-identical rendered output,
// whatever the worker count.
struct ExperimentConfig {
    std::string name;  // adp | pmf | subtree | trapezoidal
    long long n = 1;
    long long replicates = 1;
    std::uint64_t seed = 0;
    int workers = 1;
    OutFormat format = OutFormat::csv;
    int subtree_k = 1;             // subtree experiment only
    std::string sampler = "perm";  // adp only: perm | urn
    bool per_replicate = false;
    bool exhaustive = false;       // trapezoidal only: exact histogram mode
    double min_expected = 5.0;     // bin spec: minimum expected count per pooled chi-square bin

    void validate() const;
};

// One empirical/oracle comparison. `enforced` lines decide the exit status;
// the rest are reported context (asymptotic *_limit targets, histograms,
// normality diagnostics), with `ok` still honestly computed.
struct StatLine {
    std::string statistic;
    double empirical = 0;
    double oracle = 0;
    double stderr_ = 0;
    bool ok = true;
    bool enforced = false;
};

struct Report {
    std::string experiment;
    long long n = 0;
    long long replicates = 0;
    std::uint64_t seed = 0;
    std::vector<StatLine> lines;
    std::vector<std::string> notes;
    std::vector<std::string> replicate_columns;
    std::vector<std::vector<double>> replicate_values;  // row r = replicate r

    bool enforced_ok() const;
    const StatLine* find(const std::string& statistic) const;
    // Summary records, or per-replicate records when the config asked for them.
    std::string render(OutFormat format, bool per_replicate) const;
};

// Compensated (Neumaier) accumulation.
class CompensatedSum {
  public:
    void add(double x);
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0;
    double comp_ = 0;
};

// Biased central moments m2..m4 plus compensated mean; variance() is the
// unbiased sample variance.
struct Moments {
    long long count = 0;
    double mean = 0;
    double m2 = 0;
    double m3 = 0;
    double m4 = 0;

    double variance() const;
    double skewness() const;
    double excess_kurtosis() const;
    double se_mean() const;
    double se_variance() const;
};

Moments compute_moments(const std::vector<double>& xs);

// Unbiased sample covariance plus its asymptotic standard error.
struct Covariance {
    double cov = 0;
    double se = 0;
};

Covariance compute_covariance(const std::vector<double>& xs, const std::vector<double>& ys);

// Pearson chi-square against expected counts, adjacent bins pooled until each
// holds at least min_expected. Degenerate (fewer than two pooled bins) means
// the test is skipped, not failed.
struct GofResult {
    double statistic = 0;
    long long df = 0;
    double threshold = 0;  // chi-square quantile at `quantile`, df degrees of freedom
    double quantile = 0;
    bool ok = true;
    bool degenerate = false;
    std::vector<std::array<double, 3>> bins;  // point, observed, expected (unpooled)
};

GofResult chi_square_gof(const std::vector<long long>& observed, const std::vector<double>& expected,
                         double quantile = 0.999, double min_expected = 5.0);

double chi_square_quantile(double p, long long df);

// Runs body(r, rng) for every replicate r in [0, R) with rng derived from
// (seed, r); the worker split never changes which rng a replicate sees.
void run_replicates(long long R, std::uint64_t seed, int workers,
                    const std::function<void(long long, SeededRng&)>& body);

// Samples (X, Y, Z) per replicate (permutation growth or urn run, per
// cfg.sampler) and compares moments against the exact oracles.
Report experiment_adp(const ExperimentConfig& cfg);

// Chi-square of the plateau-count histogram against pmf_L(n). The optional
// sampler override is a test hook for negative controls.
Report experiment_pmf(const ExperimentConfig& cfg,
                      const std::function<long long(long long, SeededRng&)>& z_sampler = {});

// Samples subtree size and occurrence distance at vertex cfg.subtree_k,
// checks D == 2S - 1 on every sample, reports against Beta(1/2,k) moments.
Report experiment_subtree(const ExperimentConfig& cfg);

// Chi-square of distinct-element counts against pmf_L(n); with
// cfg.exhaustive, compares the full enumeration histogram exactly.
Report experiment_trapezoidal(const ExperimentConfig& cfg);

struct CheckResult {
    std::string check;
    bool passed = false;
    std::string detail;
};

// Deterministic invariant suites: bijection | enumeration | oracles |
// coupling | all. Throws std::invalid_argument on an unknown name.
std::vector<CheckResult> verify_suite(const std::string& name);

std::string render_checks(const std::vector<CheckResult>& checks, OutFormat format);

// %.17g, locale-independent; shared by both output formats.
std::string fmt_double(double v);

}  // namespace stirling
