#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "stirling/generators.hpp"
#include "stirling/harness.hpp"
#include "stirling/oracles.hpp"
#include "stirling/statistics.hpp"
#include "stirling/structures.hpp"
#include "stirling/urnsim.hpp"

namespace {

using namespace stirling;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct OutputTarget {
    std::string path;  // empty = stdout
    std::ofstream file;

    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
        }
        return file;
    }
};

OutFormat parse_format(const std::string& name) {
    if (name == "csv") return OutFormat::csv;
    if (name == "json" || name == "jsonl") return OutFormat::jsonl;
    throw CLI::ValidationError("--format", "expected csv or json");
}

int to_int(long long v, const char* what) {
    if (v < 0 || v > std::numeric_limits<int>::max())
        throw std::invalid_argument(std::string(what) + " out of range: " + std::to_string(v));
    return static_cast<int>(v);
}

// When the user omits --seed we take one from system entropy and report it.
std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t seed, std::ostream& os) {
    if (opt->count() > 0) return seed;
    std::random_device dev;
    const std::uint64_t chosen = (static_cast<std::uint64_t>(dev()) << 32) ^ dev();
    os << "# seed " << chosen << "\n";
    return chosen;
}

int cmd_generate(const std::string& kind, long long n, long long count, std::uint64_t seed,
                 bool render, bool trace, OutputTarget& out) {
    std::ostream& os = out.stream();
    for (long long i = 0; i < count; ++i) {
        SeededRng rng = SeededRng::derive(seed, static_cast<std::uint64_t>(i));
        if (kind == "stirling") {
            const auto [q, growth] = random_stirling(to_int(n, "--n"), rng);
            os << q.str();
            if (trace) {
                os << "  #";
                for (GapIndex g : growth.choices) os << ' ' << g;
            }
            os << '\n';
        } else if (kind == "tree") {
            const PlaneRecursiveTree t = random_tree(to_int(n, "--n"), rng);
            os << (render ? t.render() : tree_to_code(t).str()) << '\n';
        } else {
            os << random_trapezoidal(to_int(n, "--n"), rng).str() << '\n';
        }
    }
    return kExitOk;
}

int cmd_enumerate(const std::string& kind, long long n, int cap, bool render, OutputTarget& out) {
    std::ostream& os = out.stream();
    if (kind == "stirling") {
        enumerate_stirling(to_int(n, "--n"), [&](const StirlingPermutation& q) { os << q.str() << '\n'; },
                           cap);
    } else if (kind == "tree") {
        enumerate_trees(to_int(n, "--n"),
                        [&](const PlaneRecursiveTree& t) {
                            os << (render ? t.render() : tree_to_code(t).str()) << '\n';
                        },
                        cap);
    } else {
        enumerate_trapezoidal(to_int(n, "--n"),
                              [&](const TrapezoidalWord& w) { os << w.str() << '\n'; }, cap);
    }
    return kExitOk;
}

int cmd_stats(const std::string& kind, const std::string& in_path, OutFormat format, OutputTarget& out) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!in_path.empty()) {
        file.open(in_path);
        if (!file) throw std::runtime_error("cannot open input file: " + in_path);
        in = &file;
    }
    std::ostream& os = out.stream();
    if (format == OutFormat::csv) {
        if (kind == "stirling")
            os << "n,ascents,descents,plateaux,leaves,root_degree\n";
        else
            os << "n,distinct\n";
    }
    std::string line;
    while (std::getline(*in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (kind == "stirling") {
            const StirlingPermutation q = StirlingPermutation::parse(line);
            const AdpCounts counts = adp_counts(q);
            const PlaneRecursiveTree t = code_to_tree(q);
            if (format == OutFormat::csv) {
                os << q.n() << ',' << counts.ascents << ',' << counts.descents << ',' << counts.plateaux
                   << ',' << leaves(t) << ',' << root_degree(t) << '\n';
            } else {
                os << "{\"n\":" << q.n() << ",\"ascents\":" << counts.ascents
                   << ",\"descents\":" << counts.descents << ",\"plateaux\":" << counts.plateaux
                   << ",\"leaves\":" << leaves(t) << ",\"root_degree\":" << root_degree(t) << "}\n";
            }
        } else {
            const TrapezoidalWord w = TrapezoidalWord::parse(line);
            if (format == OutFormat::csv)
                os << w.n() << ',' << distinct_count(w) << '\n';
            else
                os << "{\"n\":" << w.n() << ",\"distinct\":" << distinct_count(w) << "}\n";
        }
    }
    return kExitOk;
}

int cmd_eulerian(long long n, bool upto, OutputTarget& out) {
    std::ostream& os = out.stream();
    for (long long m = upto ? 1 : n; m <= n; ++m) {
        const EulerianRow row = eulerian_row(to_int(m, "--n"));
        for (long long k = 1; k <= m; ++k)
            os << m << ", " << k << ", " << row.c[static_cast<std::size_t>(k)].str() << '\n';
    }
    return kExitOk;
}

int cmd_pmf(long long n, OutFormat format, OutputTarget& out) {
    std::ostream& os = out.stream();
    const ExactDist dist = pmf_L(to_int(n, "--n"));
    if (format == OutFormat::csv) os << "k,probability,probability_double\n";
    for (const auto& atom : dist.atoms) {
        if (format == OutFormat::csv)
            os << atom.point << ',' << rat_str(atom.p) << ',' << fmt_double(to_double(atom.p)) << '\n';
        else
            os << "{\"k\":" << atom.point << ",\"probability\":\"" << rat_str(atom.p)
               << "\",\"probability_double\":" << fmt_double(to_double(atom.p)) << "}\n";
    }
    return kExitOk;
}

int cmd_urn(const std::string& which, long long steps, std::uint64_t seed, long long checkpoint,
            OutputTarget& out) {
    const UrnSpec spec = which == "a" ? urn_a() : two_color_urn();
    SeededRng rng(seed);
    std::ostream& os = out.stream();
    os << "step";
    for (int c = 1; c <= spec.colors(); ++c) os << ",count_" << c;
    os << '\n';
    auto emit = [&](const UrnState& s) {
        os << s.step;
        for (long long v : s.composition) os << ',' << v;
        os << '\n';
    };
    UrnState state = initial_state(spec);
    if (checkpoint > 0) emit(state);
    for (long long i = 1; i <= steps; ++i) {
        state = step(spec, state, rng);
        if (checkpoint > 0 && (i % checkpoint == 0 || i == steps))
            emit(state);
    }
    if (checkpoint <= 0) emit(state);  // default: final state only
    return kExitOk;
}

int cmd_experiment(const ExperimentConfig& cfg, OutputTarget& out) {
    Report report;
    if (cfg.name == "adp")
        report = experiment_adp(cfg);
    else if (cfg.name == "pmf")
        report = experiment_pmf(cfg);
    else if (cfg.name == "subtree")
        report = experiment_subtree(cfg);
    else if (cfg.name == "trapezoidal")
        report = experiment_trapezoidal(cfg);
    else
        throw CLI::ValidationError("--name", "expected adp, pmf, subtree or trapezoidal");
    out.stream() << report.render(cfg.format, cfg.per_replicate);
    return report.enforced_ok() ? kExitOk : kExitCheckFailure;
}

int cmd_verify(const std::string& suite, OutFormat format, OutputTarget& out) {
    const std::vector<CheckResult> checks = verify_suite(suite);
    out.stream() << render_checks(checks, format);
    for (const CheckResult& c : checks)
        if (!c.passed) return kExitCheckFailure;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plane recursive trees, Stirling permutations and the ascent/descent/plateau urn"};
    app.require_subcommand(1);

    std::string kind = "stirling", in_path, format_name = "csv", out_path;
    std::string urn_name = "a", suite = "all";
    long long n = 1, count = 1, steps = 10, checkpoint = 0;
    std::uint64_t seed = 0;
    int cap = kEnumerationCap;
    bool render = false, trace = false, upto = false;
    ExperimentConfig cfg;

    auto* generate = app.add_subcommand("generate", "Sample uniform random objects, one per line");
    generate->add_option("--kind", kind, "stirling | tree | trapezoidal")
        ->check(CLI::IsMember({"stirling", "tree", "trapezoidal"}));
    generate->add_option("--n", n, "object size")->required();
    generate->add_option("--count", count, "number of objects");
    auto* gen_seed = generate->add_option("--seed", seed, "64-bit seed (defaults to system entropy)");
    generate->add_flag("--render", render, "print trees as nested parentheses instead of codes");
    generate->add_flag("--trace", trace, "append the growth trace to each permutation");
    generate->add_option("--out", out_path, "output path (default stdout)");

    auto* enumerate = app.add_subcommand("enumerate", "Stream every object of a given size");
    enumerate->add_option("--kind", kind, "stirling | tree | trapezoidal")
        ->check(CLI::IsMember({"stirling", "tree", "trapezoidal"}));
    enumerate->add_option("--n", n, "object size")->required();
    enumerate->add_option("--cap", cap, "enumeration refusal cap");
    enumerate->add_flag("--render", render, "print trees as nested parentheses instead of codes");
    enumerate->add_option("--out", out_path, "output path (default stdout)");

    auto* stats = app.add_subcommand("stats", "Per-object statistics for objects read line by line");
    stats->add_option("--kind", kind, "stirling | trapezoidal")
        ->check(CLI::IsMember({"stirling", "trapezoidal"}));
    stats->add_option("--in", in_path, "input path (default stdin)");
    stats->add_option("--format", format_name, "csv | json")->check(CLI::IsMember({"csv", "json", "jsonl"}));
    stats->add_option("--out", out_path, "output path (default stdout)");

    auto* eulerian = app.add_subcommand("eulerian", "Second-order Eulerian rows as 'n, k, C' lines");
    eulerian->add_option("--n", n, "row index")->required();
    eulerian->add_flag("--upto", upto, "emit every row from 1 to n");
    eulerian->add_option("--out", out_path, "output path (default stdout)");

    auto* pmf = app.add_subcommand("pmf", "Exact leaf/plateau distribution for a given n");
    pmf->add_option("--n", n, "object size")->required();
    pmf->add_option("--format", format_name, "csv | json")->check(CLI::IsMember({"csv", "json", "jsonl"}));
    pmf->add_option("--out", out_path, "output path (default stdout)");

    auto* urn = app.add_subcommand("urn", "Simulate a replacement urn; CSV trajectory");
    urn->add_option("--urn", urn_name, "a | two")->check(CLI::IsMember({"a", "two"}));
    urn->add_option("--steps", steps, "number of draws");
    auto* urn_seed = urn->add_option("--seed", seed, "64-bit seed (defaults to system entropy)");
    urn->add_option("--checkpoint", checkpoint, "emit every k-th state (default: final state only)");
    urn->add_option("--out", out_path, "output path (default stdout)");

    auto* experiment = app.add_subcommand("experiment", "Seeded Monte Carlo with oracle comparison");
    experiment->add_option("--name", cfg.name, "adp | pmf | subtree | trapezoidal")->required();
    experiment->add_option("--n", cfg.n, "object size")->required();
    experiment->add_option("--replicates", cfg.replicates, "Monte Carlo replicates");
    auto* exp_seed = experiment->add_option("--seed", cfg.seed, "64-bit seed (defaults to system entropy)");
    experiment->add_option("--workers", cfg.workers, "worker threads (never changes the output)");
    experiment->add_option("--format", format_name, "csv | json")
        ->check(CLI::IsMember({"csv", "json", "jsonl"}));
    experiment->add_option("--k", cfg.subtree_k, "subtree vertex (subtree experiment)");
    experiment->add_option("--sampler", cfg.sampler, "adp experiment: perm | urn")
        ->check(CLI::IsMember({"perm", "urn"}));
    experiment->add_flag("--per-replicate", cfg.per_replicate, "emit raw per-replicate records");
    experiment->add_flag("--exhaustive", cfg.exhaustive, "trapezoidal: exact full-enumeration histogram");
    experiment->add_option("--min-expected", cfg.min_expected, "minimum expected count per pooled bin");
    experiment->add_option("--out", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "Deterministic invariant suites");
    verify->add_option("--suite", suite, "bijection | enumeration | oracles | coupling | all")
        ->check(CLI::IsMember({"bijection", "enumeration", "oracles", "coupling", "all"}));
    verify->add_option("--format", format_name, "csv | json")->check(CLI::IsMember({"csv", "json", "jsonl"}));
    verify->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        OutputTarget out;
        out.path = out_path;
        if (generate->parsed()) {
            seed = resolve_seed(gen_seed, seed, out.stream());
            return cmd_generate(kind, n, count, seed, render, trace, out);
        }
        if (enumerate->parsed()) return cmd_enumerate(kind, n, cap, render, out);
        if (stats->parsed()) return cmd_stats(kind, in_path, parse_format(format_name), out);
        if (eulerian->parsed()) return cmd_eulerian(n, upto, out);
        if (pmf->parsed()) return cmd_pmf(n, parse_format(format_name), out);
        if (urn->parsed()) {
            seed = resolve_seed(urn_seed, seed, out.stream());
            return cmd_urn(urn_name, steps, seed, checkpoint, out);
        }
        if (experiment->parsed()) {
            cfg.format = parse_format(format_name);
            cfg.seed = resolve_seed(exp_seed, cfg.seed, out.stream());
            return cmd_experiment(cfg, out);
        }
        if (verify->parsed()) return cmd_verify(suite, parse_format(format_name), out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitOk;
}
