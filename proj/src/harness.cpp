#include "stirling/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "stirling/generators.hpp"
#include "stirling/oracles.hpp"
#include "stirling/statistics.hpp"
#include "stirling/structures.hpp"
#include "stirling/urnsim.hpp"

namespace stirling {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (n < 1) throw std::invalid_argument("config: n must be >= 1");
    if (n > std::numeric_limits<int>::max())
        throw std::invalid_argument("config: n exceeds the supported object size");
    if (replicates < 1) throw std::invalid_argument("config: replicates must be >= 1");
    if (workers < 1) throw std::invalid_argument("config: workers must be >= 1");
    if (sampler != "perm" && sampler != "urn")
        throw std::invalid_argument("config: sampler must be 'perm' or 'urn'");
    if (min_expected <= 0) throw std::invalid_argument("config: min_expected must be positive");
}

void CompensatedSum::add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

double Moments::variance() const { return count > 1 ? m2 * static_cast<double>(count) / static_cast<double>(count - 1) : 0.0; }
double Moments::skewness() const { return m2 > 0 ? m3 / std::pow(m2, 1.5) : 0.0; }
double Moments::excess_kurtosis() const { return m2 > 0 ? m4 / (m2 * m2) - 3.0 : 0.0; }
double Moments::se_mean() const { return count > 0 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0; }
double Moments::se_variance() const {
    if (count < 2) return 0.0;
    const double v = m4 - m2 * m2;
    return v > 0 ? std::sqrt(v / static_cast<double>(count)) : 0.0;
}

Moments compute_moments(const std::vector<double>& xs) {
    Moments m;
    m.count = static_cast<long long>(xs.size());
    if (xs.empty()) return m;
    CompensatedSum sum;
    for (double x : xs) sum.add(x);
    m.mean = sum.value() / static_cast<double>(m.count);
    CompensatedSum s2, s3, s4;
    for (double x : xs) {
        const double d = x - m.mean;
        const double d2 = d * d;
        s2.add(d2);
        s3.add(d2 * d);
        s4.add(d2 * d2);
    }
    m.m2 = s2.value() / static_cast<double>(m.count);
    m.m3 = s3.value() / static_cast<double>(m.count);
    m.m4 = s4.value() / static_cast<double>(m.count);
    return m;
}

Covariance compute_covariance(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("compute_covariance: length mismatch");
    const long long count = static_cast<long long>(xs.size());
    Covariance c;
    if (count < 2) return c;
    CompensatedSum sx, sy;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx.add(xs[i]);
        sy.add(ys[i]);
    }
    const double mx = sx.value() / static_cast<double>(count);
    const double my = sy.value() / static_cast<double>(count);
    CompensatedSum scov, s22;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        scov.add(dx * dy);
        s22.add(dx * dx * dy * dy);
    }
    const double cov_biased = scov.value() / static_cast<double>(count);
    const double m22 = s22.value() / static_cast<double>(count);
    c.cov = scov.value() / static_cast<double>(count - 1);
    const double v = m22 - cov_biased * cov_biased;
    c.se = v > 0 ? std::sqrt(v / static_cast<double>(count)) : 0.0;
    return c;
}

double chi_square_quantile(double p, long long df) {
    if (df < 1) throw std::invalid_argument("chi_square_quantile: df must be >= 1");
    boost::math::chi_squared_distribution<double> dist(static_cast<double>(df));
    return boost::math::quantile(dist, p);
}

GofResult chi_square_gof(const std::vector<long long>& observed, const std::vector<double>& expected,
                         double quantile, double min_expected) {
    if (observed.size() != expected.size())
        throw std::invalid_argument("chi_square_gof: length mismatch");
    GofResult result;
    result.quantile = quantile;
    result.bins.reserve(observed.size());
    for (std::size_t i = 0; i < observed.size(); ++i)
        result.bins.push_back({static_cast<double>(i), static_cast<double>(observed[i]), expected[i]});

    // pool adjacent bins until each pooled bin holds min_expected in expectation
    std::vector<std::pair<double, double>> pooled;  // (observed, expected)
    double acc_obs = 0, acc_exp = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        acc_obs += static_cast<double>(observed[i]);
        acc_exp += expected[i];
        if (acc_exp >= min_expected) {
            pooled.emplace_back(acc_obs, acc_exp);
            acc_obs = acc_exp = 0;
        }
    }
    if (acc_exp > 0 || acc_obs > 0) {
        if (pooled.empty())
            pooled.emplace_back(acc_obs, acc_exp);
        else {
            pooled.back().first += acc_obs;
            pooled.back().second += acc_exp;
        }
    }
    if (pooled.size() < 2) {
        result.degenerate = true;
        return result;
    }
    CompensatedSum stat;
    for (const auto& [obs, exp] : pooled) {
        const double d = obs - exp;
        stat.add(d * d / exp);
    }
    result.statistic = stat.value();
    result.df = static_cast<long long>(pooled.size()) - 1;
    result.threshold = chi_square_quantile(quantile, result.df);
    result.ok = result.statistic < result.threshold;
    return result;
}

void run_replicates(long long R, std::uint64_t seed, int workers,
                    const std::function<void(long long, SeededRng&)>& body) {
    if (R < 0) throw std::invalid_argument("run_replicates: negative replicate count");
    const int used = static_cast<int>(std::min<long long>(std::max(workers, 1), std::max<long long>(R, 1)));
    auto run_range = [&body, seed](long long lo, long long hi) {
        for (long long r = lo; r < hi; ++r) {
            SeededRng rng = SeededRng::derive(seed, static_cast<std::uint64_t>(r));
            body(r, rng);
        }
    };
    if (used <= 1) {
        run_range(0, R);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(used));
    const long long chunk = (R + used - 1) / used;
    for (int w = 0; w < used; ++w) {
        const long long lo = std::min<long long>(R, static_cast<long long>(w) * chunk);
        const long long hi = std::min<long long>(R, lo + chunk);
        threads.emplace_back(run_range, lo, hi);
    }
    for (auto& t : threads) t.join();
}

bool Report::enforced_ok() const {
    for (const StatLine& line : lines)
        if (line.enforced && !line.ok) return false;
    return true;
}

const StatLine* Report::find(const std::string& statistic) const {
    for (const StatLine& line : lines)
        if (line.statistic == statistic) return &line;
    return nullptr;
}

std::string Report::render(OutFormat format, bool want_per_replicate) const {
    std::string out;
    const std::string seed_str = std::to_string(seed);
    if (want_per_replicate) {
        if (format == OutFormat::csv) {
            out += "experiment,n,R,seed,replicate";
            for (const auto& col : replicate_columns) out += "," + col;
            out += "\n";
            for (std::size_t r = 0; r < replicate_values.size(); ++r) {
                out += experiment + "," + std::to_string(n) + "," + std::to_string(replicates) + "," +
                       seed_str + "," + std::to_string(r);
                for (double v : replicate_values[r]) out += "," + fmt_double(v);
                out += "\n";
            }
        } else {
            for (std::size_t r = 0; r < replicate_values.size(); ++r) {
                out += "{\"experiment\":\"" + json_escape(experiment) + "\",\"n\":" + std::to_string(n) +
                       ",\"R\":" + std::to_string(replicates) + ",\"seed\":" + seed_str +
                       ",\"replicate\":" + std::to_string(r);
                for (std::size_t j = 0; j < replicate_columns.size(); ++j)
                    out += ",\"" + json_escape(replicate_columns[j]) + "\":" + fmt_double(replicate_values[r][j]);
                out += "}\n";
            }
        }
        return out;
    }
    if (format == OutFormat::csv) {
        out += "experiment,n,R,seed,statistic,empirical,oracle,stderr,ok\n";
        for (const StatLine& line : lines) {
            out += experiment + "," + std::to_string(n) + "," + std::to_string(replicates) + "," +
                   seed_str + "," + line.statistic + "," + fmt_double(line.empirical) + "," +
                   fmt_double(line.oracle) + "," + fmt_double(line.stderr_) + "," +
                   (line.ok ? "true" : "false") + "\n";
        }
        for (const std::string& note : notes) out += "# " + note + "\n";
    } else {
        for (const StatLine& line : lines) {
            out += "{\"experiment\":\"" + json_escape(experiment) + "\",\"n\":" + std::to_string(n) +
                   ",\"R\":" + std::to_string(replicates) + ",\"seed\":" + seed_str + ",\"statistic\":\"" +
                   json_escape(line.statistic) + "\",\"empirical\":" + fmt_double(line.empirical) +
                   ",\"oracle\":" + fmt_double(line.oracle) + ",\"stderr\":" + fmt_double(line.stderr_) +
                   ",\"ok\":" + (line.ok ? "true" : "false") + "}\n";
        }
        for (const std::string& note : notes) {
            out += "{\"experiment\":\"" + json_escape(experiment) + "\",\"n\":" + std::to_string(n) +
                   ",\"R\":" + std::to_string(replicates) + ",\"seed\":" + seed_str + ",\"note\":\"" +
                   json_escape(note) + "\"}\n";
        }
    }
    return out;
}

namespace {

StatLine compare_line(std::string name, double empirical, double oracle, double se, double sigmas,
                      bool enforced) {
    StatLine line;
    line.statistic = std::move(name);
    line.empirical = empirical;
    line.oracle = oracle;
    line.stderr_ = se;
    line.ok = std::abs(empirical - oracle) <= sigmas * se;
    line.enforced = enforced;
    return line;
}

StatLine context_line(std::string name, double empirical, double oracle) {
    StatLine line;
    line.statistic = std::move(name);
    line.empirical = empirical;
    line.oracle = oracle;
    line.ok = true;
    line.enforced = false;
    return line;
}

Report base_report(const ExperimentConfig& cfg, std::string name) {
    Report report;
    report.experiment = std::move(name);
    report.n = cfg.n;
    report.replicates = cfg.replicates;
    report.seed = cfg.seed;
    return report;
}

}  // namespace

Report experiment_adp(const ExperimentConfig& cfg) {
    cfg.validate();
    Report report = base_report(cfg, "adp");
    const long long n = cfg.n;
    const long long R = cfg.replicates;
    std::vector<double> xs(static_cast<std::size_t>(R)), ys(static_cast<std::size_t>(R)),
        zs(static_cast<std::size_t>(R));
    const bool urn_mode = cfg.sampler == "urn";
    run_replicates(R, cfg.seed, cfg.workers, [&](long long r, SeededRng& rng) {
        long long x, y, z;
        if (urn_mode) {
            // urn_a inlined: drawn color keeps its count, the others gain one
            x = y = z = 1;
            for (long long m = 1; m < n; ++m) {
                const long long u = static_cast<long long>(rng.below(static_cast<std::uint64_t>(2 * m + 1)));
                if (u < x) {
                    ++y;
                    ++z;
                } else if (u < x + y) {
                    ++x;
                    ++z;
                } else {
                    ++x;
                    ++y;
                }
            }
        } else {
            const auto [q, trace] = random_stirling(static_cast<int>(n), rng);
            const AdpCounts counts = adp_counts(q);
            x = counts.ascents;
            y = counts.descents;
            z = counts.plateaux;
        }
        xs[static_cast<std::size_t>(r)] = static_cast<double>(x);
        ys[static_cast<std::size_t>(r)] = static_cast<double>(y);
        zs[static_cast<std::size_t>(r)] = static_cast<double>(z);
    });

    const double oracle_mean = to_double(mean_L(n));
    const double oracle_var = to_double(var_L(n));
    const double oracle_cov = to_double(cov_pair(n));
    const double dn = static_cast<double>(n);
    const double dR = static_cast<double>(R);

    const char* coord_names[3] = {"ascents", "descents", "plateaux"};
    const std::vector<double>* coords[3] = {&xs, &ys, &zs};
    Moments moments[3];
    for (int i = 0; i < 3; ++i) {
        const Moments m = compute_moments(*coords[i]);
        moments[i] = m;
        const std::string suffix = coord_names[i];
        report.lines.push_back(compare_line("mean_" + suffix, m.mean, oracle_mean, m.se_mean(), 3, true));
        report.lines.push_back(
            compare_line("var_" + suffix, m.variance(), oracle_var, m.se_variance(), 3, true));
        if (m.m2 > 0) {
            report.lines.push_back(
                compare_line("skew_" + suffix, m.skewness(), 0.0, std::sqrt(6.0 / dR), 4, false));
            report.lines.push_back(compare_line("exkurt_" + suffix, m.excess_kurtosis(), 0.0,
                                                std::sqrt(24.0 / dR), 4, false));
        } else {
            report.notes.push_back(std::string("skew/exkurt_") + suffix +
                                   " skipped: zero empirical variance");
        }
    }
    const std::array<std::array<int, 2>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
    Covariance pair_cov[3];
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [a, b] = pairs[p];
        pair_cov[p] = compute_covariance(*coords[a], *coords[b]);
        report.lines.push_back(compare_line(std::string("cov_") + coord_names[a] + "_" + coord_names[b],
                                            pair_cov[p].cov, oracle_cov, pair_cov[p].se, 3, true));
    }
    if (moments[0].m2 > 0 && moments[1].m2 > 0) {
        const double corr = pair_cov[0].cov / std::sqrt(moments[0].variance() * moments[1].variance());
        const double se_corr = (1.0 - corr * corr) / std::sqrt(dR);
        report.lines.push_back(compare_line("corr_ascents_descents", corr, -0.5, se_corr, 3, true));
    } else {
        report.notes.push_back("corr_ascents_descents skipped: zero empirical variance");
    }
    // asymptotic context: var/n -> 1/9, cov/n -> -1/18
    report.lines.push_back(context_line("var_plateaux_over_n_limit", moments[2].variance() / dn, 1.0 / 9.0));
    report.lines.push_back(context_line("cov_ascents_descents_over_n_limit", pair_cov[0].cov / dn, -1.0 / 18.0));

    report.replicate_columns = {"ascents", "descents", "plateaux"};
    if (cfg.per_replicate) {
        report.replicate_values.resize(static_cast<std::size_t>(R));
        for (long long r = 0; r < R; ++r) {
            const auto i = static_cast<std::size_t>(r);
            report.replicate_values[i] = {xs[i], ys[i], zs[i]};
        }
    }
    return report;
}

namespace {

void add_gof_lines(Report& report, const GofResult& gof, const std::vector<long long>& observed,
                   const std::vector<double>& expected, long long first_point) {
    if (gof.degenerate) {
        report.notes.push_back("degenerate support, chi-square test skipped");
    } else {
        StatLine chi2;
        chi2.statistic = "chi2";
        chi2.empirical = gof.statistic;
        chi2.oracle = gof.threshold;
        chi2.stderr_ = 0;
        chi2.ok = gof.ok;
        chi2.enforced = true;
        report.lines.push_back(chi2);
        report.lines.push_back(context_line("df", static_cast<double>(gof.df), 0.0));
    }
    for (std::size_t i = 0; i < observed.size(); ++i) {
        report.lines.push_back(context_line("hist_" + std::to_string(first_point + static_cast<long long>(i)),
                                            static_cast<double>(observed[i]), expected[i]));
    }
}

}  // namespace

Report experiment_pmf(const ExperimentConfig& cfg,
                      const std::function<long long(long long, SeededRng&)>& z_sampler) {
    cfg.validate();
    if (cfg.n > kJointPmfCap)
        throw std::invalid_argument("experiment_pmf: n exceeds the exact-pmf cap " +
                                    std::to_string(kJointPmfCap));
    Report report = base_report(cfg, "pmf");
    const long long n = cfg.n;
    const long long R = cfg.replicates;
    std::vector<long long> z_values(static_cast<std::size_t>(R));
    run_replicates(R, cfg.seed, cfg.workers, [&](long long r, SeededRng& rng) {
        const long long z = z_sampler ? z_sampler(n, rng)
                                      : adp_counts(random_stirling(static_cast<int>(n), rng).first).plateaux;
        z_values[static_cast<std::size_t>(r)] = z;
    });
    std::vector<long long> observed(static_cast<std::size_t>(n), 0);
    for (long long z : z_values) {
        if (z < 1 || z > n) throw std::runtime_error("experiment_pmf: sampled value out of support");
        ++observed[static_cast<std::size_t>(z) - 1];
    }
    const ExactDist dist = pmf_L(static_cast<int>(n));
    std::vector<double> expected(static_cast<std::size_t>(n), 0.0);
    for (const auto& atom : dist.atoms)
        expected[static_cast<std::size_t>(atom.point) - 1] = to_double(atom.p) * static_cast<double>(R);
    const GofResult gof = chi_square_gof(observed, expected, 0.999, cfg.min_expected);
    add_gof_lines(report, gof, observed, expected, 1);
    report.replicate_columns = {"plateaux"};
    if (cfg.per_replicate) {
        report.replicate_values.resize(static_cast<std::size_t>(R));
        for (long long r = 0; r < R; ++r)
            report.replicate_values[static_cast<std::size_t>(r)] = {
                static_cast<double>(z_values[static_cast<std::size_t>(r)])};
    }
    return report;
}

Report experiment_subtree(const ExperimentConfig& cfg) {
    cfg.validate();
    const long long n = cfg.n;
    const long long k = cfg.subtree_k;
    if (k < 1 || k > n) throw std::invalid_argument("experiment_subtree: k must be in 1..n");
    Report report = base_report(cfg, "subtree");
    const long long R = cfg.replicates;
    std::vector<double> sizes(static_cast<std::size_t>(R)), distances(static_cast<std::size_t>(R));
    std::vector<std::uint8_t> violation(static_cast<std::size_t>(R), 0);
    run_replicates(R, cfg.seed, cfg.workers, [&](long long r, SeededRng& rng) {
        const auto [q, trace] = random_stirling(static_cast<int>(n), rng);
        const PlaneRecursiveTree t = code_to_tree(q);
        const long long s = subtree_size(t, static_cast<Symbol>(k));
        const long long d = occurrence_distance(q, static_cast<Symbol>(k));
        const auto i = static_cast<std::size_t>(r);
        sizes[i] = static_cast<double>(s);
        distances[i] = static_cast<double>(d);
        violation[i] = (d != 2 * s - 1);
    });
    long long violations = 0;
    for (std::uint8_t v : violation) violations += v;

    const double m1 = to_double(beta_moment(k, 1));
    const double beta_var = to_double(beta_moment(k, 2) - beta_moment(k, 1) * beta_moment(k, 1));
    const double dn = static_cast<double>(n);
    std::vector<double> size_frac(sizes), dist_frac(distances);
    for (double& v : size_frac) v /= dn;
    for (double& v : dist_frac) v /= (2.0 * dn);
    const Moments ms = compute_moments(size_frac);
    const Moments md = compute_moments(dist_frac);
    // Beta(1/2,k) targets are limits in n; reported but not enforced here
    report.lines.push_back(compare_line("mean_subtree_frac", ms.mean, m1, ms.se_mean(), 3, false));
    report.lines.push_back(compare_line("var_subtree_frac", ms.variance(), beta_var, ms.se_variance(), 3, false));
    report.lines.push_back(compare_line("mean_distance_frac", md.mean, m1, md.se_mean(), 3, false));
    report.lines.push_back(compare_line("var_distance_frac", md.variance(), beta_var, md.se_variance(), 3, false));
    StatLine identity;
    identity.statistic = "identity_violations";
    identity.empirical = static_cast<double>(violations);
    identity.oracle = 0;
    identity.ok = violations == 0;
    identity.enforced = true;
    report.lines.push_back(identity);

    report.replicate_columns = {"subtree_size", "distance"};
    if (cfg.per_replicate) {
        report.replicate_values.resize(static_cast<std::size_t>(R));
        for (long long r = 0; r < R; ++r) {
            const auto i = static_cast<std::size_t>(r);
            report.replicate_values[i] = {sizes[i], distances[i]};
        }
    }
    return report;
}

Report experiment_trapezoidal(const ExperimentConfig& cfg) {
    cfg.validate();
    const long long n = cfg.n;
    Report report = base_report(cfg, "trapezoidal");
    if (cfg.exhaustive) {
        const EulerianRow row = eulerian_row(static_cast<int>(n));
        std::vector<long long> observed(static_cast<std::size_t>(n), 0);
        enumerate_trapezoidal(static_cast<int>(n), [&](const TrapezoidalWord& w) {
            ++observed[static_cast<std::size_t>(distinct_count(w)) - 1];
        });
        bool match = true;
        for (long long kk = 1; kk <= n; ++kk)
            match = match && BigInt(observed[static_cast<std::size_t>(kk) - 1]) == row.c[static_cast<std::size_t>(kk)];
        StatLine line;
        line.statistic = "exact_histogram_match";
        line.empirical = match ? 1 : 0;
        line.oracle = 1;
        line.ok = match;
        line.enforced = true;
        report.lines.push_back(line);
        for (long long kk = 1; kk <= n; ++kk)
            report.lines.push_back(context_line("hist_" + std::to_string(kk),
                                                static_cast<double>(observed[static_cast<std::size_t>(kk) - 1]),
                                                row.c[static_cast<std::size_t>(kk)].convert_to<double>()));
        report.notes.push_back("exhaustive mode: replicates/seed unused");
        return report;
    }
    if (n > kJointPmfCap)
        throw std::invalid_argument("experiment_trapezoidal: n exceeds the exact-pmf cap " +
                                    std::to_string(kJointPmfCap));
    const long long R = cfg.replicates;
    std::vector<long long> counts(static_cast<std::size_t>(R));
    run_replicates(R, cfg.seed, cfg.workers, [&](long long r, SeededRng& rng) {
        counts[static_cast<std::size_t>(r)] = distinct_count(random_trapezoidal(static_cast<int>(n), rng));
    });
    std::vector<long long> observed(static_cast<std::size_t>(n), 0);
    for (long long c : counts) ++observed[static_cast<std::size_t>(c) - 1];
    const ExactDist dist = pmf_L(static_cast<int>(n));
    std::vector<double> expected(static_cast<std::size_t>(n), 0.0);
    for (const auto& atom : dist.atoms)
        expected[static_cast<std::size_t>(atom.point) - 1] = to_double(atom.p) * static_cast<double>(R);
    const GofResult gof = chi_square_gof(observed, expected, 0.999, cfg.min_expected);
    add_gof_lines(report, gof, observed, expected, 1);
    report.replicate_columns = {"distinct"};
    if (cfg.per_replicate) {
        report.replicate_values.resize(static_cast<std::size_t>(R));
        for (long long r = 0; r < R; ++r)
            report.replicate_values[static_cast<std::size_t>(r)] = {
                static_cast<double>(counts[static_cast<std::size_t>(r)])};
    }
    return report;
}

// ---------------------------------------------------------------------------
// verify suites

namespace {

void add_check(std::vector<CheckResult>& out, const std::string& name, bool passed, std::string detail) {
    out.push_back({name, passed, std::move(detail)});
}

void verify_bijection(std::vector<CheckResult>& out) {
    // exhaustive round trips, both directions, n <= 6
    bool round_ok = true;
    long long objects = 0;
    for (int n = 0; n <= 6 && round_ok; ++n) {
        enumerate_stirling(n, [&](const StirlingPermutation& q) {
            ++objects;
            round_ok = round_ok && tree_to_code(code_to_tree(q)) == q;
        });
        enumerate_trees(n, [&](const PlaneRecursiveTree& t) {
            ++objects;
            round_ok = round_ok && code_to_tree(tree_to_code(t)) == t;
        });
    }
    add_check(out, "roundtrip_exhaustive_n_le_6", round_ok,
              "checked " + std::to_string(objects) + " objects both ways");

    bool random_ok = true;
    const int runs = 10000;
    for (int i = 0; i < runs && random_ok; ++i) {
        SeededRng rng = SeededRng::derive(0x5EEDBA5EULL, static_cast<std::uint64_t>(i));
        const auto [q, trace] = random_stirling(100, rng);
        random_ok = validate_stirling(q.seq) && tree_to_code(code_to_tree(q)) == q;
    }
    add_check(out, "roundtrip_random_n100", random_ok, std::to_string(runs) + " seeded objects at n=100");

    bool closure_ok = true, commute_ok = true, gaps_ok = true;
    for (int n = 0; n <= 5; ++n) {
        enumerate_stirling(n, [&](const StirlingPermutation& q) {
            const GapIndex gaps = static_cast<GapIndex>(q.seq.size());
            gaps_ok = gaps_ok && gaps == 2 * static_cast<GapIndex>(n);
            const PlaneRecursiveTree t = code_to_tree(q);
            for (GapIndex g = 0; g <= gaps; ++g) {
                const StirlingPermutation grown = insert_pair(q, g);
                closure_ok = closure_ok && validate_stirling(grown.seq);
                commute_ok = commute_ok && tree_to_code(attach_leaf(t, g)) == grown;
            }
            try {
                insert_pair(q, gaps + 1);
                gaps_ok = false;
            } catch (const std::invalid_argument&) {
            }
        });
    }
    add_check(out, "insert_pair_closure_n_le_5", closure_ok, "every gap of every object");
    add_check(out, "attach_leaf_commutes_n_le_5", commute_ok,
              "tree_to_code(attach_leaf(t,g)) == insert_pair(code,g) everywhere");
    add_check(out, "gap_count_2n_plus_1", gaps_ok, "2n+1 gaps exposed, one past rejected");
}

void verify_enumeration(std::vector<CheckResult>& out) {
    const long long expected_counts[7] = {1, 1, 3, 15, 105, 945, 10395};
    bool counts_ok = true, valid_ok = true;
    for (int n = 1; n <= 6; ++n) {
        long long count = 0;
        enumerate_stirling(n, [&](const StirlingPermutation& q) {
            ++count;
            valid_ok = valid_ok && validate_stirling(q.seq);
        });
        counts_ok = counts_ok && count == expected_counts[n] &&
                    BigInt(count) == double_factorial(n);
        long long words = 0;
        enumerate_trapezoidal(n, [&](const TrapezoidalWord& w) {
            ++words;
            valid_ok = valid_ok && w.valid();
        });
        counts_ok = counts_ok && words == expected_counts[n];
        long long trees = 0;
        enumerate_trees(n, [&](const PlaneRecursiveTree& t) {
            ++trees;
            valid_ok = valid_ok && t.valid();
        });
        counts_ok = counts_ok && trees == expected_counts[n];
    }
    add_check(out, "counts_equal_double_factorial", counts_ok, "(1,3,15,105,945,10395) for n=1..6");
    add_check(out, "enumerated_objects_valid", valid_ok, "permutations, words and trees");

    const auto q2 = enumerate_stirling(2);
    const bool order_ok = q2.size() == 3 && q2[0].seq == Seq{2, 2, 1, 1} && q2[1].seq == Seq{1, 2, 2, 1} &&
                          q2[2].seq == Seq{1, 1, 2, 2};
    add_check(out, "enumeration_order_fixed", order_ok, "n=2 order is 2211, 1221, 1122");

    bool hist_ok = true;
    std::string spot;
    for (int n = 1; n <= 6 && hist_ok; ++n) {
        const EulerianRow row = eulerian_row(n);
        std::vector<long long> by_plateaux(static_cast<std::size_t>(n) + 1, 0);
        std::vector<long long> by_ascents(static_cast<std::size_t>(n) + 1, 0);
        std::vector<long long> by_descents(static_cast<std::size_t>(n) + 1, 0);
        std::vector<long long> by_leaves(static_cast<std::size_t>(n) + 1, 0);
        std::vector<long long> by_distinct(static_cast<std::size_t>(n) + 1, 0);
        enumerate_stirling(n, [&](const StirlingPermutation& q) {
            const AdpCounts counts = adp_counts(q);
            ++by_plateaux[static_cast<std::size_t>(counts.plateaux)];
            ++by_ascents[static_cast<std::size_t>(counts.ascents)];
            ++by_descents[static_cast<std::size_t>(counts.descents)];
        });
        enumerate_trees(n, [&](const PlaneRecursiveTree& t) {
            ++by_leaves[static_cast<std::size_t>(leaves(t))];
        });
        enumerate_trapezoidal(n, [&](const TrapezoidalWord& w) {
            ++by_distinct[static_cast<std::size_t>(distinct_count(w))];
        });
        for (int k = 0; k <= n; ++k) {
            const BigInt& c = row.c[static_cast<std::size_t>(k)];
            hist_ok = hist_ok && BigInt(by_plateaux[static_cast<std::size_t>(k)]) == c &&
                      BigInt(by_ascents[static_cast<std::size_t>(k)]) == c &&
                      BigInt(by_descents[static_cast<std::size_t>(k)]) == c &&
                      BigInt(by_leaves[static_cast<std::size_t>(k)]) == c &&
                      BigInt(by_distinct[static_cast<std::size_t>(k)]) == c;
        }
        if (n == 3)
            spot = "row n=3 is {" + row.c[1].str() + ", " + row.c[2].str() + ", " + row.c[3].str() + "}";
    }
    const EulerianRow row3 = eulerian_row(3);
    const bool spot_ok = row3.c[1] == 1 && row3.c[2] == 8 && row3.c[3] == 6;
    add_check(out, "histograms_equal_eulerian_row", hist_ok && spot_ok, spot);
}

void verify_oracles(std::vector<CheckResult>& out) {
    bool marginals_ok = true, exch_ok = true, moments_ok = true, sumzero_ok = true;
    for (int n = 1; n <= 50; ++n) {
        const ExactDist3 joint = joint_pmf(n);
        const ExactDist reference = pmf_L(n);
        for (int axis = 0; axis < 3; ++axis)
            marginals_ok = marginals_ok && joint.marginal(axis) == reference;
        const std::array<std::array<int, 3>, 6> perms = {
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        for (const auto& perm : perms) exch_ok = exch_ok && joint.permuted(perm) == joint;
        moments_ok = moments_ok && joint.mean(0) == mean_L(n) && joint.covariance(2, 2) == var_L(n) &&
                     joint.covariance(0, 1) == cov_pair(n) && joint.covariance(0, 2) == cov_pair(n) &&
                     joint.covariance(1, 2) == cov_pair(n);
        sumzero_ok = sumzero_ok && var_L(n) + 2 * cov_pair(n) == 0;
    }
    add_check(out, "joint_marginals_equal_pmf_L_n_le_50", marginals_ok, "all three axes, exact");
    add_check(out, "joint_exchangeable_n_le_50", exch_ok, "all 6 coordinate permutations, exact");
    add_check(out, "dp_moments_equal_closed_forms_n_le_50", moments_ok,
              "mean (2n+1)/3, var 2(n^2-1)/(9(2n-1)), cov -(n^2-1)/(9(2n-1))");
    add_check(out, "var_plus_2cov_is_zero", sumzero_ok, "n <= 50");

    bool rows_ok = true;
    for (int n = 1; n <= 200; ++n) rows_ok = rows_ok && eulerian_row(n).sum() == double_factorial(n);
    add_check(out, "eulerian_row_sums_to_double_factorial", rows_ok, "n <= 200");

    const auto poly = char_poly3(urn_a());
    const bool char_ok = poly == std::array<long long, 4>{-2, -3, 0, 1};
    add_check(out, "urn_a_char_poly", char_ok, "det(xI-A) = (x-2)(x+1)^2 = x^3 - 3x - 2");

    const BigRational smv = simplified_model_variance(1000000) / 1000000;
    const BigRational limit_simplified(4, 27);
    const BigRational vl = var_L(1000000) / 1000000;
    const BigRational limit_real(1, 9);
    const bool contrast_ok = abs(smv - limit_simplified) * 1000 <= limit_simplified &&
                             abs(vl - limit_real) * 1000 <= limit_real;
    add_check(out, "simplified_model_contrast", contrast_ok,
              "at n=10^6: hypergeometric var/n within 0.1% of 4/27, urn var/n within 0.1% of 1/9");

    const CovMatrix3 sigma = asymptotic_sigma();
    bool sigma_ok = true;
    for (int i = 0; i < 3; ++i) {
        BigRational row_sum = 0;
        for (int j = 0; j < 3; ++j) {
            row_sum += sigma.m[i][j];
            sigma_ok = sigma_ok && sigma.m[i][j] == (i == j ? BigRational(1, 9) : BigRational(-1, 18));
        }
        sigma_ok = sigma_ok && row_sum == 0;
    }
    add_check(out, "asymptotic_sigma_entries", sigma_ok, "diag 1/9, off-diag -1/18, zero row sums");

    const bool beta_ok = beta_moment(1, 1) == BigRational(1, 3) && beta_moment(1, 2) == BigRational(1, 5) &&
                         beta_moment(2, 1) == BigRational(1, 5);
    add_check(out, "beta_moment_spot_values", beta_ok, "(k,r)=(1,1),(1,2),(2,1)");

    const BigRational d10 = abs(var_L(10) / 10 - limit_real);
    const BigRational d100 = abs(var_L(100) / 100 - limit_real);
    const BigRational d1000 = abs(var_L(1000) / 1000 - limit_real);
    add_check(out, "variance_over_n_approaches_one_ninth", d10 > d100 && d100 > d1000,
              "monotone trend at n = 10, 100, 1000");
}

void verify_coupling(std::vector<CheckResult>& out) {
    std::vector<long long> comp;
    SeededRng base(1);
    const bool base_ok = coupled_growth_check(1, base, &comp) && comp == std::vector<long long>{1, 1, 1};
    add_check(out, "coupling_base_case_n1", base_ok, "composition (1,1,1)");

    bool exhaustive_ok = true;
    std::vector<std::vector<long long>> finals;
    for (GapIndex g = 0; g <= 2; ++g) {
        exhaustive_ok = coupled_growth_check_with(2, [g](int, GapIndex) { return g; }, &comp) && exhaustive_ok;
        finals.push_back(comp);
    }
    std::sort(finals.begin(), finals.end());
    const std::vector<std::vector<long long>> want = {{1, 2, 2}, {2, 1, 2}, {2, 2, 1}};
    add_check(out, "coupling_exhaustive_n2", exhaustive_ok && finals == want,
              "all 3 gap choices tracked, compositions match the adp histogram");

    bool runs_ok = true;
    for (int i = 0; i < 1000 && runs_ok; ++i) {
        SeededRng rng = SeededRng::derive(0xC0DE5EEDULL, static_cast<std::uint64_t>(i));
        runs_ok = coupled_growth_check(100, rng);
    }
    add_check(out, "coupling_random_runs_n100", runs_ok, "1000 seeded runs");
}

}  // namespace

std::vector<CheckResult> verify_suite(const std::string& name) {
    std::vector<CheckResult> out;
    if (name == "bijection")
        verify_bijection(out);
    else if (name == "enumeration")
        verify_enumeration(out);
    else if (name == "oracles")
        verify_oracles(out);
    else if (name == "coupling")
        verify_coupling(out);
    else if (name == "all") {
        verify_bijection(out);
        verify_enumeration(out);
        verify_oracles(out);
        verify_coupling(out);
    } else {
        throw std::invalid_argument("verify_suite: unknown suite '" + name +
                                    "' (expected bijection, enumeration, oracles, coupling or all)");
    }
    return out;
}

std::string render_checks(const std::vector<CheckResult>& checks, OutFormat format) {
    std::string out;
    if (format == OutFormat::csv) {
        out += "check,passed,detail\n";
        for (const CheckResult& c : checks)
            out += c.check + "," + (c.passed ? "true" : "false") + ",\"" + c.detail + "\"\n";
    } else {
        for (const CheckResult& c : checks)
            out += "{\"check\":\"" + json_escape(c.check) + "\",\"passed\":" + (c.passed ? "true" : "false") +
                   ",\"detail\":\"" + json_escape(c.detail) + "\"}\n";
    }
    return out;
}

}  // namespace stirling
