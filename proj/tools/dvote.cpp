// Command-line driver for discordant-voting experiments: Monte Carlo
// simulation, exact solvers, birth-and-death chain profiles, drift scans and
// graph parameters. All outputs are deterministic given --seed.

#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dvote/analysis.hpp"
#include "dvote/bd_chain.hpp"
#include "dvote/coloring.hpp"
#include "dvote/exact.hpp"
#include "dvote/io.hpp"
#include "dvote/mc.hpp"

using namespace dvote;

namespace {

struct CommonArgs {
    std::string family = "cycle";
    int n = 10;
    std::string protocol = "push";
    std::string coloring = "random_balanced";
    int red_count = -1;
    std::string opinions;  // explicit bitstring
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    std::uint64_t cutoff = kDefaultCutoff;
    int threads = 0;
    std::string out;
    std::string format = "csv";
    std::string graph_file;
};

ColoringSpec make_spec(const CommonArgs& a) {
    ColoringSpec spec;
    spec.kind = coloring_from_name(a.coloring);
    spec.red_count = a.red_count;
    spec.seed = a.seed;
    if (spec.kind == ColoringKind::explicit_bits) {
        for (char ch : a.opinions) {
            if (ch != '0' && ch != '1')
                throw CLI::ValidationError("--opinions must be a 0/1 bitstring");
            spec.bits.push_back(static_cast<Opinion>(ch - '0'));
        }
    }
    return spec;
}

Graph make_graph(const CommonArgs& a, std::optional<std::vector<Opinion>>* file_opinions) {
    if (!a.graph_file.empty()) {
        std::ifstream in(a.graph_file);
        if (!in) throw CLI::ValidationError("cannot open graph file: " + a.graph_file);
        LoadedGraph lg = read_graph(in);
        if (file_opinions) *file_opinions = lg.opinions;
        return lg.graph;
    }
    return Graph::generate(family_from_name(a.family), a.n);
}

// Renders into a buffer first so argument errors never leave partial output.
void emit(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << payload;
}

int run_simulate(const CommonArgs& a, const std::string& trace_path) {
    std::optional<std::vector<Opinion>> file_ops;
    Graph g = make_graph(a, &file_ops);
    ColoringSpec spec = make_spec(a);
    if (file_ops && spec.kind == ColoringKind::explicit_bits && spec.bits.empty())
        spec.bits = *file_ops;

    if (!trace_path.empty()) {
        // one traced trial before the estimate
        std::ofstream trace(trace_path);
        if (!trace) throw std::runtime_error("cannot open trace file: " + trace_path);
        Configuration c = init_configuration(g, spec);
        run_to_consensus(c, protocol_from_name(a.protocol), Rng::for_trial(a.seed, 0), a.cutoff,
                         &trace);
    }

    SweepRow row;
    row.family = g.family().value_or(Family::complete);
    row.protocol = protocol_from_name(a.protocol);
    row.n = g.vertex_count();
    row.stats =
        estimate_consensus_time(g, spec, row.protocol, a.trials, a.seed, a.cutoff, a.threads);
    row.normalized = row.stats.mean;

    std::ostringstream buf;
    if (a.format == "json")
        write_sweep_json(buf, {row});
    else
        write_sweep_csv(buf, {row});
    emit(a.out, buf.str());
    return 0;
}

Normalizer normalizer_from_name(const std::string& name) {
    if (name == "none") return Normalizer::none();
    if (name == "n2") return Normalizer::n_squared();
    if (name == "nlogn") return Normalizer::n_log_n();
    if (name == "n2logn") return Normalizer::n2_log_n();
    if (name == "n4") return Normalizer::n_fourth();
    if (name == "rnr") return Normalizer::oblivious_rnr();
    throw CLI::ValidationError("unknown normalizer: " + name);
}

int run_sweep(const CommonArgs& a, const std::vector<int>& sizes, const std::string& norm) {
    auto rows = sweep(family_from_name(a.family), make_spec(a), protocol_from_name(a.protocol),
                      sizes, a.trials, a.seed, a.cutoff, normalizer_from_name(norm), a.threads);
    std::ostringstream buf;
    if (a.format == "json")
        write_sweep_json(buf, rows);
    else
        write_sweep_csv(buf, rows);
    emit(a.out, buf.str());
    return 0;
}

// One table across all five families and three protocols at desk scale.
// Polynomial regimes are estimated by Monte Carlo; exponential regimes use
// the exact solvers (lumped complete graph, brute force elsewhere).
int run_table1(const CommonArgs& a) {
    std::ostringstream buf;
    buf << "family,protocol,n,method,value,normalizer,normalized\n";

    auto emit_row = [&](Family f, Protocol p, int n, const std::string& method, double value,
                        const Normalizer& norm) {
        double divisor = norm.value(n, n / 2);
        buf << family_name(f) << ',' << protocol_name(p) << ',' << n << ',' << method << ','
            << format_number(value) << ',' << norm.name() << ','
            << format_number(value / divisor) << '\n';
    };

    auto mc_mean = [&](Family f, int param, Protocol p, const ColoringSpec& spec) {
        Graph g = Graph::generate(f, param);
        EstimateStats s =
            estimate_consensus_time(g, spec, p, a.trials, a.seed, a.cutoff, a.threads);
        return std::pair<int, double>(g.vertex_count(), s.mean);
    };

    // complete graph
    for (int n : {32, 64, 128}) {
        auto [nn, push] =
            mc_mean(Family::complete, n, Protocol::push, ColoringSpec::random_balanced(a.seed));
        emit_row(Family::complete, Protocol::push, nn, "mc", push, Normalizer::n_log_n());
        auto [nn2, obl] = mc_mean(Family::complete, n, Protocol::oblivious,
                                  ColoringSpec::random_balanced(a.seed));
        emit_row(Family::complete, Protocol::oblivious, nn2, "mc", obl,
                 Normalizer::oblivious_rnr());
    }
    for (int n : {8, 10, 12})
        emit_row(Family::complete, Protocol::pull, n, "exact",
                 complete_lumped_expected_time(n, Protocol::pull), Normalizer::pow2(1.0));
    // cycle
    for (int n : {32, 64, 128}) {
        for (Protocol p : {Protocol::push, Protocol::pull, Protocol::oblivious}) {
            auto [nn, mean] = mc_mean(Family::cycle, n, p, ColoringSpec::half_arc());
            emit_row(Family::cycle, p, nn, "mc", mean, Normalizer::n_squared());
        }
    }
    // star: lumped exact for push/pull, MC for oblivious
    for (int n : {32, 64, 128}) {
        emit_row(Family::star, Protocol::push, n, "exact",
                 star_lumped_expected_time(n, Protocol::push, n / 2, kRed),
                 Normalizer::n2_log_n());
        emit_row(Family::star, Protocol::pull, n, "exact",
                 star_lumped_expected_time(n, Protocol::pull, n / 2, kRed),
                 Normalizer::n_squared());
        auto [nn, obl] = mc_mean(Family::star, n, Protocol::oblivious,
                                 ColoringSpec::random_balanced(a.seed));
        emit_row(Family::star, Protocol::oblivious, nn, "mc", obl, Normalizer::oblivious_rnr());
    }
    // double star and barbell: brute force at desk scale
    for (int leaves : {3, 4, 5}) {
        Graph g = Graph::double_star(leaves);
        Configuration c = init_configuration(g, ColoringSpec::star_bipartite());
        int n = g.vertex_count();
        emit_row(Family::double_star, Protocol::push, n, "exact",
                 brute_force_expected_time(g, c, Protocol::push), Normalizer::pow2(0.2));
        emit_row(Family::double_star, Protocol::pull, n, "exact",
                 brute_force_expected_time(g, c, Protocol::pull), Normalizer::n_fourth());
        emit_row(Family::double_star, Protocol::oblivious, n, "exact",
                 brute_force_expected_time(g, c, Protocol::oblivious),
                 Normalizer::oblivious_rnr());
    }
    for (int clique : {3, 4, 5}) {
        Graph g = Graph::barbell(clique);
        Configuration c = init_configuration(g, ColoringSpec::clique_bipartite());
        int n = g.vertex_count();
        emit_row(Family::barbell, Protocol::push, n, "exact",
                 brute_force_expected_time(g, c, Protocol::push), Normalizer::pow2(0.1));
        emit_row(Family::barbell, Protocol::pull, n, "exact",
                 brute_force_expected_time(g, c, Protocol::pull), Normalizer::pow2(0.5));
        emit_row(Family::barbell, Protocol::oblivious, n, "exact",
                 brute_force_expected_time(g, c, Protocol::oblivious),
                 Normalizer::oblivious_rnr());
    }

    emit(a.out, buf.str());
    return 0;
}

int run_exact(const CommonArgs& a, const std::string& method, const std::string& dump_path) {
    std::ostringstream buf;
    buf << "states,ET\n";
    if (method == "lumped") {
        Protocol p = protocol_from_name(a.protocol);
        Family f = family_from_name(a.family);
        if (f == Family::complete) {
            buf << (a.n / 2 + 1) << ','
                << format_number(complete_lumped_expected_time(a.n, p)) << '\n';
        } else if (f == Family::star) {
            int r = a.red_count < 0 ? a.n / 2 : a.red_count;
            buf << 2 * a.n << ',' << format_number(star_lumped_expected_time(a.n, p, r, kRed))
                << '\n';
        } else {
            throw CLI::ValidationError("--method lumped supports complete and star only");
        }
    } else {
        std::optional<std::vector<Opinion>> file_ops;
        Graph g = make_graph(a, &file_ops);
        Protocol p = protocol_from_name(a.protocol);
        ColoringSpec spec = make_spec(a);
        if (file_ops && spec.kind == ColoringKind::explicit_bits && spec.bits.empty())
            spec.bits = *file_ops;
        Configuration c = init_configuration(g, spec);
        BruteForceResult table = brute_force_table(g, c, p);
        buf << table.state_count() << ',' << format_number(table.start_value()) << '\n';
        if (!dump_path.empty()) {
            std::ostringstream dump;
            dump << "state_key,expected_steps\n";
            for (std::size_t i = 0; i < table.state_count(); ++i)
                dump << table.state_keys[i] << ',' << format_number(table.expected_steps[i])
                     << '\n';
            emit(dump_path, dump.str());
        }
    }
    emit(a.out, buf.str());
    return 0;
}

int run_chain(const CommonArgs& a, const std::string& kind, int delta) {
    ChainSpec c = (kind == "pull") ? pull_chain(a.n, delta) : push_chain(a.n, delta);
    HitProfile h = hit_profile(c);
    std::ostringstream buf;
    buf << "i,E_step,E_cum\n";
    for (int i = 1; i <= c.top; ++i)
        buf << i << ',' << format_number(h.step[i]) << ',' << format_number(h.cum[i]) << '\n';
    emit(a.out, buf.str());
    return 0;
}

int run_params_output(const CommonArgs& a, const Graph& g, const std::string& label) {
    // The cut-based parameters need exhaustive subset enumeration and are
    // reported as nan beyond the size limit; nu has no such restriction.
    auto guarded = [](double (*f)(const Graph&), const Graph& g) {
        try {
            return f(g);
        } catch (const std::invalid_argument&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    std::ostringstream buf;
    buf << "family,n,phi,psi,nu\n";
    buf << label << ',' << g.vertex_count() << ',' << format_number(guarded(conductance, g))
        << ',' << format_number(guarded(push_bound_parameter, g)) << ','
        << format_number(degree_irregularity(g)) << '\n';
    emit(a.out, buf.str());
    return 0;
}

int run_analyze(const CommonArgs& a, int drift_n, const std::vector<int>& lp_args,
                const std::vector<std::string>& params_args) {
    std::ostringstream buf;
    if (drift_n > 0) {
        buf << "protocol,n,configs,edges_checked,violations,worst_edge_margin,"
               "worst_aggregate_margin,worst_potential_margin\n";
        bool all_hold = true;
        for (Protocol p : {Protocol::push, Protocol::pull}) {
            DriftScanResult res = drift_scan(drift_n, p);
            all_hold = all_hold && res.violations == 0;
            buf << protocol_name(p) << ',' << res.n << ',' << res.configs << ','
                << res.edges_checked << ',' << res.violations << ','
                << format_number(res.worst_edge_margin) << ','
                << format_number(res.worst_aggregate_margin) << ','
                << format_number(res.worst_potential_margin) << '\n';
        }
        std::cerr << (all_hold ? "all inequalities hold" : "VIOLATIONS FOUND") << '\n';
        emit(a.out, buf.str());
        return all_hold ? 0 : 1;
    }
    if (!lp_args.empty()) {
        int n = lp_args[0];
        int r0 = lp_args.size() > 1 ? lp_args[1] : n / 2;
        CycleLpSolution sol = cycle_lp_bound(n, r0);
        double bound = (10.0 * std::numbers::pi * std::numbers::pi / 3.0) * n * n;
        buf << "n,r0,tstar,bound,primal_equals_dual,within_bound\n";
        buf << n << ',' << r0 << ',' << format_number(sol.tstar) << ',' << format_number(bound)
            << ',' << (sol.primal == sol.dual ? 1 : 0) << ',' << (sol.tstar <= bound ? 1 : 0)
            << '\n';
        emit(a.out, buf.str());
        return 0;
    }
    if (!params_args.empty()) {
        CommonArgs b = a;
        b.family = params_args[0];
        b.n = std::stoi(params_args[1]);
        Graph g = Graph::generate(family_from_name(b.family), b.n);
        return run_params_output(b, g, b.family);
    }
    throw CLI::ValidationError("analyze needs one of --drift-scan, --lp, --params");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discordant voting toolkit"};
    app.require_subcommand(1);

    CommonArgs a;
    std::string trace_path, method = "brute", dump_path, chain_kind = "push", norm = "none";
    std::vector<int> sizes, lp_args;
    std::vector<std::string> params_args;
    int delta = 0, drift_n = 0;
    bool table1 = false;

    auto add_common = [&](CLI::App* cmd, bool with_protocol) {
        cmd->add_option("--out,-o", a.out, "output file (default stdout)");
        cmd->add_option("--format", a.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--seed", a.seed, "master RNG seed");
        cmd->add_option("--threads", a.threads, "worker threads (0 = DVOTE_THREADS or cores)");
        if (with_protocol)
            cmd->add_option("--protocol", a.protocol, "push, pull or oblivious")
                ->check(CLI::IsMember({"push", "pull", "oblivious"}));
    };
    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("--family", a.family, "graph family")
            ->check(CLI::IsMember({"complete", "cycle", "star", "double_star", "barbell"}));
        cmd->add_option("--n", a.n, "family size parameter");
        cmd->add_option("--graph-file", a.graph_file, "load graph from text format instead");
        cmd->add_option("--coloring", a.coloring, "initial coloring kind")
            ->check(CLI::IsMember({"half_arc", "alternating", "star_bipartite",
                                   "clique_bipartite", "random_balanced", "all_but_one",
                                   "first_r_red", "explicit"}));
        cmd->add_option("--r", a.red_count, "red count for first_r_red (-1 = n/2)");
        cmd->add_option("--opinions", a.opinions, "explicit coloring bitstring");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo consensus-time estimate");
    add_common(simulate, true);
    add_graph(simulate);
    simulate->add_option("--trials", a.trials, "number of trials");
    simulate->add_option("--cutoff", a.cutoff, "per-trial step cutoff");
    simulate->add_option("--trace", trace_path, "dump one trial's trajectory to this file");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "estimates across sizes");
    add_common(sweep_cmd, true);
    add_graph(sweep_cmd);
    sweep_cmd->add_option("--sizes", sizes, "ascending size list")->delimiter(',');
    sweep_cmd->add_option("--trials", a.trials, "trials per size");
    sweep_cmd->add_option("--cutoff", a.cutoff, "per-trial step cutoff");
    sweep_cmd->add_option("--normalizer", norm, "none|n2|nlogn|n2logn|n4|rnr")
        ->check(CLI::IsMember({"none", "n2", "nlogn", "n2logn", "n4", "rnr"}));
    sweep_cmd->add_flag("--table1", table1, "run the five-family summary table");

    CLI::App* exact_cmd = app.add_subcommand("exact", "exact expected consensus time");
    add_common(exact_cmd, true);
    add_graph(exact_cmd);
    exact_cmd->add_option("--method", method, "brute or lumped")
        ->check(CLI::IsMember({"brute", "lumped"}));
    exact_cmd->add_option("--dump-states", dump_path, "write per-state expectations to a file");

    CLI::App* chain_cmd = app.add_subcommand("chain", "birth-and-death chain hitting profile");
    add_common(chain_cmd, false);
    chain_cmd->add_option("--kind", chain_kind, "push or pull")
        ->check(CLI::IsMember({"push", "pull"}));
    chain_cmd->add_option("--n", a.n, "even chain size parameter (states 0..n/2)");
    chain_cmd->add_option("--delta", delta, "drift adjustment in {-1,0,1}")
        ->check(CLI::Range(-1, 1));

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "drift scans, LP bound, parameters");
    add_common(analyze_cmd, false);
    analyze_cmd->add_option("--drift-scan", drift_n, "exhaustive cycle drift scan at this n");
    analyze_cmd->add_option("--lp", lp_args, "cycle LP instance: n [r0]")->expected(1, 2);
    analyze_cmd->add_option("--params", params_args, "graph parameters: family n")->expected(2);

    CLI::App* params_cmd = app.add_subcommand("params", "conductance and related parameters");
    add_common(params_cmd, false);
    add_graph(params_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed()) return run_simulate(a, trace_path);
        if (sweep_cmd->parsed()) {
            if (table1) return run_table1(a);
            if (sizes.empty()) throw CLI::ValidationError("sweep needs --sizes or --table1");
            return run_sweep(a, sizes, norm);
        }
        if (exact_cmd->parsed()) return run_exact(a, method, dump_path);
        if (chain_cmd->parsed()) return run_chain(a, chain_kind, delta);
        if (analyze_cmd->parsed()) return run_analyze(a, drift_n, lp_args, params_args);
        if (params_cmd->parsed()) {
            std::optional<std::vector<Opinion>> ops;
            Graph g = make_graph(a, &ops);
            return run_params_output(a, g, a.graph_file.empty() ? a.family : "file");
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
