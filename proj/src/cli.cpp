#include "tripart/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tripart/cache.hpp"
#include "tripart/enumerate.hpp"
#include "tripart/errors.hpp"
#include "tripart/formulas.hpp"
#include "tripart/partition.hpp"
#include "tripart/patterns.hpp"
#include "tripart/randlab.hpp"
#include "tripart/report.hpp"

namespace tripart {
namespace {

struct Options {
    std::optional<int> n;
    std::string predicate = "f5free";
    std::optional<double> mu;
    std::optional<double> theta;
    std::optional<std::uint64_t> trials;
    std::uint64_t seed = 1;
    std::optional<std::string> mode;
    std::optional<std::string> file;
    std::optional<std::string> cache_dir;
    std::string format = "text";
    unsigned workers = 1;
    std::optional<double> p;
    std::optional<int> l;
    std::optional<long long> m;
    std::optional<double> a;
    std::optional<double> fraction;
    int s_gap_max = 1000;
    int multinomial_max = 30;
    std::optional<double> min_rate;
    std::optional<std::uint64_t> samples;
    bool verify = false;
    std::string experiment;
    std::string cache_action = "verify";
};

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

int require_n(const Options& o) {
    if (!o.n) throw std::invalid_argument("--n is required");
    return *o.n;
}

std::string join_vertices(const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i] + 1);
    return "{" + s + "}";
}

void count_table(RunReport& r, const CountTable& t) {
    auto& table = r.table("by edge count", t.unlabeled_by_edges.empty() ? std::vector<std::string>{"edges", "labeled"}
                                                                        : std::vector<std::string>{"edges", "classes", "labeled"});
    for (std::size_t k = 0; k < t.labeled_by_edges.size(); ++k) {
        const bool has_classes = !t.unlabeled_by_edges.empty();
        if (t.labeled_by_edges[k] == 0 && (!has_classes || t.unlabeled_by_edges[k] == 0)) continue;
        if (has_classes) {
            table.rows.push_back({std::to_string(k), std::to_string(t.unlabeled_by_edges[k]), t.labeled_by_edges[k].str()});
        } else {
            table.rows.push_back({std::to_string(k), t.labeled_by_edges[k].str()});
        }
    }
    auto& totals = r.table("totals", {"n", "predicate", "labeled", "classes"});
    totals.rows.push_back({std::to_string(t.n), t.predicate, t.labeled_total.str(),
                           t.unlabeled_total ? std::to_string(*t.unlabeled_total) : "-"});
}

bool flags_consistent(const PredicateFlags& f) {
    return f.cancellative == (f.f5free && f.k4mfree) && (!f.tripartite || f.cancellative);
}

/// Records from the cache when it holds the entry, otherwise freshly generated
/// (and written to the cache when a directory is given).
std::vector<EnumRecord> obtain_records(const Options& o, int n, Predicate pred, RunReport& r) {
    const std::string name = to_string(pred);
    if (o.cache_dir && cache_exists(*o.cache_dir, n, name)) {
        CacheEntry entry = cache_read(*o.cache_dir, n, name);
        r.param("source", "cache");
        r.verdict("cache checksum and canonical forms verified", true, cache_records_path(*o.cache_dir, n, name).string());
        return std::move(entry.records);
    }
    std::vector<EnumRecord> records = generate_isofree(n, pred, o.workers);
    r.param("source", "generated");
    if (o.cache_dir) cache_write(*o.cache_dir, n, name, records);
    return records;
}

RunReport cmd_enumerate(const Options& o) {
    const int n = require_n(o);
    const Predicate pred = parse_predicate(o.predicate);
    RunReport r("enumerate");
    r.param("n", std::to_string(n));
    r.param("predicate", o.predicate);
    const std::vector<EnumRecord> records = obtain_records(o, n, pred, r);
    count_table(r, tabulate(n, o.predicate, records));

    const PredicateSpec spec = predicate_spec(pred);
    bool consistent = true;
    bool hereditary = true;
    for (std::size_t i = 0; i < records.size(); ++i) {
        consistent = consistent && flags_consistent(records[i].flags);
        if (i % 100 != 0) continue;
        const TripleSystem h = records[i].system();
        for (const Triple& e : h.edges()) hereditary = hereditary && spec.accepts(h.without_edge(e));
    }
    r.verdict("flags consistent (cancellative iff f5free and k4mfree; tripartite implies cancellative)", consistent);
    r.verdict("edge deletions stay in the class (every 100th record)", hereditary);
    return r;
}

RunReport cmd_count(const Options& o) {
    const int n = require_n(o);
    const Predicate pred = parse_predicate(o.predicate);
    const std::string mode = o.mode.value_or("isofree");
    RunReport r("count");
    r.param("n", std::to_string(n));
    r.param("predicate", o.predicate);
    r.param("mode", mode);
    r.param("verify", o.verify ? "yes" : "no");
    CountTable table;
    if (mode == "brute") {
        table = brute_force_count(n, pred, o.workers, true);
        r.param("source", "brute force");
    } else if (mode == "isofree") {
        table = tabulate(n, o.predicate, obtain_records(o, n, pred, r));
    } else {
        throw std::invalid_argument("count --mode must be isofree or brute");
    }
    count_table(r, table);
    if (o.verify) {
        const CountTable oracle = brute_force_count(n, pred, o.workers, true);
        r.verdict("labeled total equals brute force", oracle.labeled_total == table.labeled_total,
                  table.labeled_total.str() + " vs " + oracle.labeled_total.str());
        r.verdict("histogram equals brute force", oracle.labeled_by_edges == table.labeled_by_edges);
        r.verdict("class count equals brute-force canonical dedup", oracle.unlabeled_total == table.unlabeled_total);
    }
    return r;
}

RunReport cmd_extremal(const Options& o) {
    const int n = require_n(o);
    const Predicate pred = parse_predicate(o.predicate);
    RunReport r("extremal");
    r.param("n", std::to_string(n));
    r.param("predicate", o.predicate);
    const ExtremalResult res = extremal_search(n, pred);
    const PredicateSpec spec = predicate_spec(pred);
    auto& t = r.table("extremal", {"n", "predicate", "max edges", "s(n)", "nodes", "witness"});
    t.rows.push_back({std::to_string(n), o.predicate, std::to_string(res.value), to_decimal(tripartite_max_edges(n)),
                      std::to_string(res.nodes), to_string(res.witness)});
    r.verdict("witness satisfies the predicate and has the reported size",
              spec.accepts(res.witness) && static_cast<int>(res.witness.size()) == res.value);
    const BigInt s = tripartite_max_edges(n);
    r.observe("max edges vs s(n)", std::to_string(res.value) + (BigInt(res.value) == s ? " = " : BigInt(res.value) > s ? " > " : " < ") +
                                      s.str());
    return r;
}

TripleSystem load_file(const Options& o) {
    if (!o.file) throw std::invalid_argument("--file is required");
    return read_system_file(*o.file);
}

RunReport cmd_partition(const Options& o) {
    const TripleSystem h = load_file(o);
    RunReport r("partition");
    r.param("file", *o.file);
    const PartitionResult res = optimal_partition(h);
    auto& t = r.table("optimal partition", {"part", "vertices"});
    for (int part = 0; part < 3; ++part) {
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < h.order(); ++v) {
            if (res.partition.part_of(v) == part) vs.push_back(v);
        }
        t.rows.push_back({std::to_string(part + 1), join_vertices(vs)});
    }
    auto& s = r.table("summary", {"n", "edges", "badCount", "tripartite"});
    s.rows.push_back({std::to_string(h.order()), std::to_string(h.size()), std::to_string(res.bad_count),
                      res.bad_count == 0 ? "yes" : "no"});
    r.verdict("reported partition has the reported bad count", non_crossing_count(h, res.partition) == res.bad_count);
    return r;
}

RunReport cmd_check(const Options& o) {
    const TripleSystem h = load_file(o);
    RunReport r("check");
    r.param("file", *o.file);
    const auto f5 = find_f5(h);
    const auto k4 = find_k4minus(h);
    const auto cancel = find_cancellation_violation(h);
    const auto tri = find_tripartition(h);
    auto& t = r.table("properties", {"property", "holds", "witness"});
    const auto edges_of = [](const std::optional<PatternHit>& hit) {
        if (!hit) return std::string("-");
        std::string s;
        for (const Triple& e : hit->edges) s += (s.empty() ? "" : " ") + to_string(e);
        return s;
    };
    t.rows.push_back({"f5free", f5 ? "no" : "yes", edges_of(f5)});
    t.rows.push_back({"k4mfree", k4 ? "no" : "yes", edges_of(k4)});
    t.rows.push_back({"cancellative", cancel ? "no" : "yes", edges_of(cancel)});
    std::string parts = "-";
    if (tri) {
        parts.clear();
        for (int part = 0; part < 3; ++part) {
            std::vector<Vertex> vs;
            for (Vertex v = 0; v < h.order(); ++v) {
                if (tri->part_of(v) == part) vs.push_back(v);
            }
            parts += (part ? " " : "") + join_vertices(vs);
        }
    }
    t.rows.push_back({"tripartite", tri ? "yes" : "no", parts});
    bool witnesses = true;
    for (const auto* hit : {&f5, &k4, &cancel}) {
        if (*hit) witnesses = witnesses && witness_is_valid(h, **hit);
    }
    r.verdict("witnesses re-validate", witnesses);
    r.verdict("cancellative iff f5free and k4mfree", !cancel.has_value() == (!f5 && !k4));
    r.verdict("tripartite implies cancellative", !tri || !cancel);
    if (tri) r.verdict("tripartition has no non-crossing edge", non_crossing_count(h, *tri) == 0);
    return r;
}

RunReport cmd_check_formulas(const Options& o) {
    RunReport r("check-formulas");
    r.param("s_gap_max", std::to_string(o.s_gap_max));
    r.param("multinomial_max", std::to_string(o.multinomial_max));
    auto& bounds = r.table("bound checks", {"name", "parameters", "lhs", "relation", "rhs", "holds", "observed"});
    const auto row = [&](const BoundCheck& c) {
        bounds.rows.push_back({c.name, c.parameters, c.lhs, c.relation, c.rhs, c.holds ? "yes" : "no",
                               c.observed ? fmt(*c.observed) : "-"});
    };

    // s(n) basics.
    bool cubes = true;
    bool monotone = true;
    for (int n = 0; n <= o.s_gap_max; ++n) {
        if (n % 3 == 0) cubes = cubes && tripartite_max_edges(n) == BigInt(n / 3) * (n / 3) * (n / 3);
        if (n > 0) monotone = monotone && tripartite_max_edges(n) >= tripartite_max_edges(n - 1);
    }
    r.verdict("s(3k) = k^3", cubes);
    r.verdict("s is nondecreasing", monotone);

    // s-gap sweep.
    const auto gaps = check_s_gap(o.s_gap_max);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (!gaps[i].holds) ++failures;
        if (i < 6 || !gaps[i].holds) row(gaps[i]);
    }
    r.verdict("s(n) - s(n-2) >= 2n^2/9 - n for 3 <= n <= " + std::to_string(o.s_gap_max), failures == 0,
              std::to_string(gaps.size() - failures) + "/" + std::to_string(gaps.size()));

    // T(n) from the tripartite enumeration.
    std::vector<BigInt> t_values;
    for (int n = 0; n <= kExtremalBound; ++n) t_values.push_back(labeled_total(generate_isofree(n, Predicate::Tripartite, o.workers), n));
    for (int n = 0; n <= kExtremalBound; ++n) {
        const BoundCheck c = check_tripartite_count_bound(n, t_values[static_cast<std::size_t>(n)]);
        row(c);
        if (n == 0) {
            r.observe("T(0) < 3^0 2^s(0) (boundary)", c.holds ? "holds" : "fails as strict: 1 < 1");
        } else {
            r.verdict("T(" + std::to_string(n) + ") < 3^n 2^s(n)", c.holds, c.lhs + " < " + c.rhs);
        }
    }
    for (int n = 3; n <= kExtremalBound; ++n) {
        const BoundCheck c = check_tripartite_count_ratio(n, t_values[static_cast<std::size_t>(n - 2)], t_values[static_cast<std::size_t>(n)]);
        row(c);
        r.verdict("T(" + std::to_string(n - 2) + ") < n^2 2^(-2n^2/9+n) T(" + std::to_string(n) + ")", c.holds);
    }

    // Entropy bounds.
    bool single_ok = true;
    for (int n = 10; n <= 100; n += 10) {
        for (const auto& [num, den] : {std::pair{1, 10}, std::pair{1, 5}, std::pair{1, 4}, std::pair{3, 10}, std::pair{2, 5}}) {
            if ((n * num) % den != 0) continue;
            const auto c = check_entropy_binomial(n, num, den);
            single_ok = single_ok && c.single.holds;
            row(c.single);
            row(c.partial_sum);
        }
        const auto threshold = entropy_sum_threshold(n);
        r.observe("partial-sum entropy bound threshold n=" + std::to_string(n),
                  threshold ? "holds for all k <= " + std::to_string(*threshold) + " (x <= " + fmt(static_cast<double>(*threshold) / n) + ")"
                            : "fails already at k = 1");
    }
    r.verdict("C(n,xn) < 2^(H(x)n) on the grid", single_ok);
    bool symmetric = true;
    for (int i = 0; i <= 1000; ++i) {
        const double x = i / 1000.0;
        symmetric = symmetric && std::abs(binary_entropy(x) - binary_entropy(1.0 - x)) <= 1e-12;
    }
    r.verdict("H(x) = H(1-x) within 1e-12 on a grid of 1001 points", symmetric);

    // Multinomial identities.
    bool sums = true;
    bool balanced = true;
    for (int n = 0; n <= o.multinomial_max; ++n) {
        sums = sums && check_multinomial_sum(n).holds;
        balanced = balanced && check_balanced_maximum(n).holds;
    }
    r.verdict("sum of multinomials = 3^n for n <= " + std::to_string(o.multinomial_max), sums);
    r.verdict("balanced split maximizes the multinomial for n <= " + std::to_string(o.multinomial_max), balanced);
    for (int n = 1; n <= o.multinomial_max; ++n) {
        if (n <= 10 || n == o.multinomial_max) row(check_multinomial_dominance(n));
    }
    const auto n0 = smallest_dominance_start(o.multinomial_max);
    r.observe("3^n < 0.6 n^2 multinomial(balanced) holds for all n in [n0, " + std::to_string(o.multinomial_max) + "]",
              n0 ? "n0 = " + std::to_string(*n0) : "never");

    // Chernoff evaluator.
    auto& ch = r.table("chernoff bound", {"m", "p", "a", "exp(-a^2/(2pm))"});
    for (const auto& [m, p, a] : {std::tuple{100LL, 0.5, 10.0}, std::tuple{1000LL, 0.5, 100.0}, std::tuple{100LL, 0.25, 5.0}}) {
        ch.rows.push_back({std::to_string(m), fmt(p), fmt(a), fmt(chernoff_bound(m, p, a))});
    }
    r.verdict("chernoff_bound(100, 1/2, 10) = exp(-1) within 1e-12", std::abs(chernoff_bound(100, 0.5, 10) - std::exp(-1.0)) <= 1e-12);
    return r;
}

RunReport cmd_sample(const Options& o) {
    const int n = require_n(o);
    const double p = o.p.value_or(0.5);
    RunReport r("sample");
    r.param("n", std::to_string(n));
    r.param("p", fmt(p));
    r.param("seed", std::to_string(o.seed));
    r.param("substreams", "0");
    const PlantedSample s = sample_planted(n, p, o.seed, 0);
    if (o.file) {
        write_system_file(*o.file, s.system);
        r.param("file", *o.file);
    }
    auto& t = r.table("planted partition", {"part", "vertices"});
    for (int part = 0; part < 3; ++part) {
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < n; ++v) {
            if (s.planted.part_of(v) == part) vs.push_back(v);
        }
        t.rows.push_back({std::to_string(part + 1), join_vertices(vs)});
    }
    auto& sum = r.table("summary", {"edges", "s(n)"});
    sum.rows.push_back({std::to_string(s.system.size()), to_decimal(tripartite_max_edges(n))});
    r.verdict("every edge crosses the planted partition", non_crossing_count(s.system, s.planted) == 0);
    if (!o.file) r.notes.push_back("system: " + to_string(s.system));
    return r;
}

RunReport cmd_experiment(const Options& o) {
    const std::string& kind = o.experiment;
    if (kind == "triangle") {
        TriangleOptions t;
        t.l = o.l.value_or(t.l);
        t.m = static_cast<int>(o.m.value_or(t.m));
        t.theta = o.theta.value_or(t.theta);
        t.trials = o.trials.value_or(t.trials);
        t.seed = o.seed;
        t.min_rate = o.min_rate;
        t.workers = o.workers;
        return triangle_experiment(t);
    }
    if (kind == "density") {
        DensityOptions d;
        d.n = o.n.value_or(d.n);
        d.p = o.p.value_or(d.p);
        d.mu = o.mu.value_or(d.mu);
        d.mode = parse_audit_mode(o.mode.value_or("sampled"));
        d.trials = o.trials.value_or(d.trials);
        d.seed = o.seed;
        d.workers = o.workers;
        return density_experiment(d);
    }
    if (kind == "unique-partition") {
        UniquePartitionOptions u;
        u.n = o.n.value_or(u.n);
        u.p = o.p.value_or(u.p);
        u.trials = o.trials.value_or(u.trials);
        u.seed = o.seed;
        u.samples = o.samples.value_or(u.samples);
        u.min_rate = o.min_rate;
        u.workers = o.workers;
        return unique_partition_experiment(u);
    }
    if (kind == "chernoff") {
        ChernoffOptions c;
        c.m = o.m.value_or(c.m);
        c.p = o.p.value_or(c.p);
        c.a = o.a.value_or(c.a);
        c.trials = o.trials.value_or(c.trials);
        c.seed = o.seed;
        c.workers = o.workers;
        return chernoff_empirical(c);
    }
    if (kind == "stability") {
        const int n = require_n(o);
        if (!o.cache_dir) throw CacheMissing("stability needs --cache-dir holding the f5free enumeration; run 'tripart enumerate --n " + std::to_string(n) + " --predicate f5free --cache-dir DIR' first");
        CacheEntry entry = cache_read(*o.cache_dir, n, "f5free");
        RunReport r = stability_probe(entry.records, n, o.fraction.value_or(1.0));
        r.param("cache_dir", *o.cache_dir);
        return r;
    }
    if (kind == "matching") {
        return matching_experiment(o.n.value_or(50), o.p.value_or(0.2), o.trials.value_or(200), o.seed);
    }
    throw std::invalid_argument("unknown experiment '" + kind + "' (expected triangle|density|unique-partition|chernoff|stability|matching)");
}

RunReport cmd_cache(const Options& o) {
    if (!o.cache_dir) throw std::invalid_argument("--cache-dir is required");
    RunReport r("cache " + o.cache_action);
    r.param("cache_dir", *o.cache_dir);
    if (o.cache_action == "verify") {
        const int n = require_n(o);
        r.param("n", std::to_string(n));
        r.param("predicate", o.predicate);
        const CacheEntry e = cache_read(*o.cache_dir, n, o.predicate);
        r.verdict("checksum, counts and canonical forms verified", true);
        count_table(r, tabulate(n, o.predicate, e.records));
        return r;
    }
    if (o.cache_action == "list") {
        auto& t = r.table("entries", {"manifest"});
        if (std::filesystem::exists(*o.cache_dir)) {
            std::vector<std::string> names;
            for (const auto& f : std::filesystem::directory_iterator(*o.cache_dir)) {
                const std::string name = f.path().filename().string();
                if (name.size() > 14 && name.ends_with(".manifest.json")) names.push_back(name);
            }
            std::sort(names.begin(), names.end());
            for (auto& name : names) t.rows.push_back({name});
        }
        return r;
    }
    throw std::invalid_argument("cache action must be verify or list");
}

template <class T>
CLI::Option* opt(CLI::App& app, const std::string& flag, T& target, const std::string& help) {
    std::string env = flag.substr(2);
    for (char& c : env) c = c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return app.add_option(flag, target, help)->envname(std::string(kEnvPrefix) + env);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact enumeration and verification for 3-uniform hypergraphs", "tripart"};
    app.require_subcommand(1, 1);
    opt(app, "--n", o.n, "number of vertices");
    opt(app, "--predicate", o.predicate, "all|f5free|k4mfree|cancellative|tripartite")->capture_default_str();
    opt(app, "--mu", o.mu, "density parameter");
    opt(app, "--theta", o.theta, "relative band half-width");
    opt(app, "--trials", o.trials, "number of trials");
    opt(app, "--seed", o.seed, "random seed")->capture_default_str();
    opt(app, "--mode", o.mode, "count: isofree|brute; density: exact|sampled");
    opt(app, "--file", o.file, "system file (input, or output for sample)");
    opt(app, "--cache-dir", o.cache_dir, "enumeration cache directory");
    opt(app, "--format", o.format, "text|machine")->check(CLI::IsMember({"text", "machine"}))->capture_default_str();
    opt(app, "--workers", o.workers, "worker threads")->check(CLI::Range(1U, 256U))->capture_default_str();
    opt(app, "--p", o.p, "edge probability");
    opt(app, "--l", o.l, "cylinder density denominator");
    opt(app, "--m", o.m, "cylinder part size or binomial trials");
    opt(app, "--a", o.a, "Chernoff deviation");
    opt(app, "--fraction", o.fraction, "stability edge fraction of n^3/27");
    opt(app, "--s-gap-max", o.s_gap_max, "largest n in the s-gap sweep")->check(CLI::Range(3, 1000000))->capture_default_str();
    opt(app, "--multinomial-max", o.multinomial_max, "largest n for multinomial identities")->check(CLI::Range(1, 200))->capture_default_str();
    opt(app, "--min-rate", o.min_rate, "turn experiment rates into pass/fail at this threshold");
    opt(app, "--samples", o.samples, "condition (ii) draws per trial (unique-partition)");
    app.add_flag("--verify", o.verify, "cross-check against brute force")->envname(std::string(kEnvPrefix) + "VERIFY");

    const auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help)->fallthrough(); };
    sub("enumerate", "isomorph-free generation (uses and fills the cache)");
    sub("count", "labeled and unlabeled counts");
    sub("extremal", "maximum edge count under a predicate");
    sub("partition", "optimal 3-partition of a system file");
    sub("check", "pattern and class membership of a system file");
    sub("check-formulas", "certified closed-form inequalities");
    sub("sample", "planted tripartite sample");
    sub("experiment", "randomized experiments")
        ->add_option("kind", o.experiment, "triangle|density|unique-partition|chernoff|stability|matching")
        ->required();
    sub("cache", "inspect the enumeration cache")
        ->add_option("action", o.cache_action, "verify|list")
        ->check(CLI::IsMember({"verify", "list"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run 'tripart --help' for usage\n";
        return kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    try {
        if (command == "enumerate") report = cmd_enumerate(o);
        else if (command == "count") report = cmd_count(o);
        else if (command == "extremal") report = cmd_extremal(o);
        else if (command == "partition") report = cmd_partition(o);
        else if (command == "check") report = cmd_check(o);
        else if (command == "check-formulas") report = cmd_check_formulas(o);
        else if (command == "sample") report = cmd_sample(o);
        else if (command == "experiment") report = cmd_experiment(o);
        else report = cmd_cache(o);
    } catch (const ChecksumMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitAssertionFailed;
    } catch (const CacheMissing& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << (o.file ? *o.file + ": " : "") << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitAssertionFailed;
    }
    report.workers = o.workers;
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << (o.format == "machine" ? report.to_machine() : report.to_text());
    return report.passed() ? kExitOk : kExitAssertionFailed;
}

} // namespace tripart
