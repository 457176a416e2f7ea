// Command-line front end: build oracles, answer queries, audit contracts,
// run bench scenarios, plus helpers to generate graphs and dump spanners.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ado/audit.hpp"
#include "ado/bench.hpp"
#include "ado/composite.hpp"
#include "ado/generators.hpp"
#include "ado/spanner.hpp"

namespace {

struct BuildArgs {
    std::string input;
    std::string format = "edge-list";
    std::string kind = "tz";
    std::uint32_t k = 2;
    std::string epsilon = "1";
    std::uint32_t kappa = 0;
    std::string param_mode = "paper-c";
    std::uint64_t seed = 1;
    std::string out;
    bool largest_component = false;
    bool contract_zeros = false;
    std::string merge_map;
};

ado::Graph prepare_graph(const std::string& path, const std::string& format,
                         bool largest_component, bool contract_zeros,
                         const std::string& merge_map_path) {
    ado::Graph g = ado::load_graph(path, ado::parse_format(format));
    if (largest_component) {
        auto extract = ado::largest_component(g);
        if (extract.graph.n() != g.n())
            std::cerr << "note: kept largest component (" << extract.graph.n() << " of " << g.n()
                      << " vertices)\n";
        g = std::move(extract.graph);
    }
    auto contraction = ado::contract_zero_edges(g);
    if (contraction.changed) {
        if (!contract_zeros)
            throw std::runtime_error(
                "graph has zero-weight edges; pass --contract-zeros to merge them");
        std::cerr << "note: contracted zero-weight edges (" << contraction.graph.n() << " of "
                  << g.n() << " vertices remain)\n";
        if (!merge_map_path.empty()) {
            std::ofstream map_out(merge_map_path);
            if (!map_out)
                throw std::runtime_error("cannot open '" + merge_map_path + "' for writing");
            for (ado::VertexId v = 0; v < contraction.vertex_map.size(); ++v)
                map_out << v << ' ' << contraction.vertex_map[v] << '\n';
        }
        g = std::move(contraction.graph);
    }
    return g;
}

int run_build(const BuildArgs& args) {
    ado::Graph g = prepare_graph(args.input, args.format, args.largest_component,
                                 args.contract_zeros, args.merge_map);
    auto report = ado::validate_graph(g);
    if (!report.connected)
        throw std::runtime_error(
            "graph is disconnected; rerun with --largest-component to keep the largest piece");

    ado::CompositeOracle oracle;
    ado::OracleKind kind = ado::parse_kind(args.kind);
    switch (kind) {
        case ado::OracleKind::kTz:
            oracle = ado::build_tz_oracle(g, args.kappa != 0 ? args.kappa : args.k, args.seed);
            break;
        case ado::OracleKind::kWarmup:
            oracle = ado::build_warmup(g, args.k, ado::Rational::parse(args.epsilon), args.seed);
            break;
        case ado::OracleKind::kSmallK:
            oracle = ado::build_small_k(g, args.k, args.seed);
            break;
        case ado::OracleKind::kNearLinear: {
            auto mode = args.param_mode == "large-k" ? ado::NearLinearMode::kLargeK
                                                     : ado::NearLinearMode::kPaperC;
            if (args.param_mode != "large-k" && args.param_mode != "paper-c")
                throw std::runtime_error("unknown --param-mode '" + args.param_mode + "'");
            oracle = ado::build_near_linear(g, args.k, args.seed, mode);
            break;
        }
    }
    ado::save_oracle(oracle, args.out);

    std::cout << "built " << ado::kind_name(oracle.kind);
    if (oracle.fallback)
        std::cout << " (fallback from " << ado::kind_name(oracle.requested) << ")";
    std::cout << ": n=" << oracle.n << " certified stretch " << oracle.certificate
              << " entries " << oracle.stored_entries() << " build "
              << oracle.info.seconds_total << "s\n";
    return 0;
}

int run_query(const std::string& oracle_path, const std::string& pairs_arg) {
    ado::CompositeOracle oracle = ado::load_oracle(oracle_path);
    std::vector<std::pair<ado::VertexId, ado::VertexId>> pairs;

    auto comma = pairs_arg.find(',');
    if (comma != std::string::npos && pairs_arg.find('\n') == std::string::npos &&
        !std::ifstream(pairs_arg).good()) {
        pairs.push_back({static_cast<ado::VertexId>(std::stoul(pairs_arg.substr(0, comma))),
                         static_cast<ado::VertexId>(std::stoul(pairs_arg.substr(comma + 1)))});
    } else {
        std::ifstream in(pairs_arg);
        if (!in) throw std::runtime_error("cannot open pair file '" + pairs_arg + "'");
        std::uint64_t u, v;
        while (in >> u >> v)
            pairs.push_back({static_cast<ado::VertexId>(u), static_cast<ado::VertexId>(v)});
    }

    for (auto [u, v] : pairs) {
        ado::Dist estimate = oracle.query(u, v);
        std::cout << u << ' ' << v << ' ';
        if (estimate == ado::kInfDist)
            std::cout << "inf\n";
        else
            std::cout << estimate << '\n';
    }
    return 0;
}

int run_audit(const std::string& oracle_path, const std::string& graph_path,
              const std::string& format, const std::string& pairs_mode, std::uint64_t seed,
              const std::string& json_out) {
    ado::CompositeOracle oracle = ado::load_oracle(oracle_path);
    ado::Graph g = ado::load_graph(graph_path, ado::parse_format(format));
    if (g.n() != oracle.n)
        throw std::runtime_error("graph/oracle size mismatch; was the oracle built from this "
                                 "file (same normalization flags)?");

    ado::PairSample pairs;
    if (pairs_mode == "all") {
        pairs = ado::PairSample::all(g.n());
    } else if (pairs_mode.rfind("sample=", 0) == 0) {
        pairs = ado::PairSample::random(g.n(), std::stoull(pairs_mode.substr(7)), seed);
    } else {
        throw std::runtime_error("--pairs must be 'all' or 'sample=N'");
    }

    ado::AuditReport report = ado::audit_oracle(oracle, g, pairs);
    std::cout << "oracle " << report.oracle << " certified " << report.bound << "\n"
              << "pairs " << report.pairs_audited << " (finite " << report.finite_pairs << ")\n"
              << "max stretch " << static_cast<double>(report.max_stretch) << " mean "
              << static_cast<double>(report.mean_stretch) << "\n"
              << "entries " << report.entries << " budget "
              << static_cast<double>(report.budget)
              << (report.size_within_budget ? " (within)" : " (OVER)") << "\n"
              << "violations " << report.violations.size() << "\n";
    for (std::size_t i = 0; i < report.violations.size() && i < 10; ++i) {
        const auto& violation = report.violations[i];
        std::cout << "  " << (violation.hard ? "HARD " : "") << "pair (" << violation.u << ", "
                  << violation.v << ") exact " << violation.exact << " estimate "
                  << violation.estimate << "\n";
    }

    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) throw std::runtime_error("cannot open '" + json_out + "' for writing");
        out << "{\n  \"oracle\": \"" << report.oracle << "\",\n  \"bound\": " << report.bound
            << ",\n  \"pairs\": " << report.pairs_audited
            << ",\n  \"max_stretch\": " << static_cast<double>(report.max_stretch)
            << ",\n  \"mean_stretch\": " << static_cast<double>(report.mean_stretch)
            << ",\n  \"entries\": " << report.entries
            << ",\n  \"budget\": " << static_cast<double>(report.budget)
            << ",\n  \"violations\": " << report.violations.size() << "\n}\n";
    }
    return report.ok() ? 0 : 2;
}

int run_bench(const std::string& scenario, const std::string& csv_out,
              const std::string& json_out) {
    ado::BenchOutput result = ado::bench_run_file(scenario);
    std::ofstream out(csv_out);
    if (!out) throw std::runtime_error("cannot open '" + csv_out + "' for writing");
    out << result.csv;
    if (!json_out.empty()) {
        std::ofstream jout(json_out);
        if (!jout) throw std::runtime_error("cannot open '" + json_out + "' for writing");
        jout << result.json_summary << '\n';
    } else {
        std::cout << result.json_summary << '\n';
    }
    return result.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"approximate distance oracles: build, query, audit, bench"};
    app.require_subcommand(1);

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "build an oracle from a graph file");
    build->add_option("--input", build_args.input, "graph file")->required();
    build->add_option("--format", build_args.format, "dimacs-gr | edge-list");
    build->add_option("--kind", build_args.kind, "tz | warmup | small-k | near-linear");
    build->add_option("--k", build_args.k, "stretch parameter (bound 2k-1)");
    build->add_option("--epsilon", build_args.epsilon, "warmup spanner parameter (rational)");
    build->add_option("--kappa", build_args.kappa, "level count for kind=tz (defaults to --k)");
    build->add_option("--param-mode", build_args.param_mode, "paper-c | large-k");
    build->add_option("--seed", build_args.seed, "build seed");
    build->add_option("--out", build_args.out, "oracle output file")->required();
    build->add_flag("--largest-component", build_args.largest_component,
                    "keep only the largest connected component");
    build->add_flag("--contract-zeros", build_args.contract_zeros,
                    "contract zero-weight edges instead of rejecting them");
    build->add_option("--write-merge-map", build_args.merge_map,
                      "write the zero-contraction vertex map to this file");

    std::string oracle_path, pairs_arg;
    auto* query = app.add_subcommand("query", "answer distance queries from an oracle file");
    query->add_option("--oracle", oracle_path, "oracle file")->required();
    query->add_option("--pairs", pairs_arg, "pair file ('u v' per line) or a single 'u,v'")
        ->required();

    std::string audit_oracle_path, audit_graph, audit_format = "edge-list",
                audit_pairs = "all", audit_json;
    std::uint64_t audit_seed = 1;
    auto* audit = app.add_subcommand("audit", "verify stretch and size contracts");
    audit->add_option("--oracle", audit_oracle_path, "oracle file")->required();
    audit->add_option("--graph", audit_graph, "graph the oracle was built from")->required();
    audit->add_option("--format", audit_format, "dimacs-gr | edge-list");
    audit->add_option("--pairs", audit_pairs, "all | sample=N");
    audit->add_option("--seed", audit_seed, "seed for sampled pairs");
    audit->add_option("--json", audit_json, "also write a JSON report here");

    std::string scenario_path, csv_out, bench_json;
    auto* bench = app.add_subcommand("bench", "run a scenario file and emit CSV");
    bench->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    bench->add_option("--out", csv_out, "CSV output file")->required();
    bench->add_option("--json", bench_json, "JSON summary output file");

    std::string gen_family = "gnm", gen_out;
    std::uint64_t gen_n = 64, gen_aux = 0, gen_seed = 1, gen_wmin = 1, gen_wmax = 100;
    auto* gen = app.add_subcommand("gen", "generate a test graph");
    gen->add_option("--family", gen_family, "gnm | grid | tree-chords | preferential | path");
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--aux", gen_aux, "density knob (m / chords / degree)");
    gen->add_option("--wmin", gen_wmin, "minimum weight");
    gen->add_option("--wmax", gen_wmax, "maximum weight");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "edge-list output file")->required();

    std::string spanner_input, spanner_format = "edge-list", spanner_out;
    std::uint32_t spanner_k = 2;
    std::uint64_t spanner_seed = 1;
    auto* spanner = app.add_subcommand("spanner", "build a spanner and dump its edge list");
    spanner->add_option("--input", spanner_input, "graph file")->required();
    spanner->add_option("--format", spanner_format, "dimacs-gr | edge-list");
    spanner->add_option("--k-prime", spanner_k, "spanner parameter (stretch 2k'-1)");
    spanner->add_option("--seed", spanner_seed, "seed");
    spanner->add_option("--out", spanner_out, "edge-list output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return run_build(build_args);
        if (query->parsed()) return run_query(oracle_path, pairs_arg);
        if (audit->parsed())
            return run_audit(audit_oracle_path, audit_graph, audit_format, audit_pairs,
                             audit_seed, audit_json);
        if (bench->parsed()) return run_bench(scenario_path, csv_out, bench_json);
        if (gen->parsed()) {
            ado::Graph g = ado::generate_family(gen_family, static_cast<ado::VertexId>(gen_n),
                                                gen_aux, gen_wmin, gen_wmax, gen_seed);
            ado::write_graph(g, gen_out, ado::GraphFormat::kEdgeList);
            std::cout << "wrote " << gen_out << ": n=" << g.n() << " m=" << g.m() << '\n';
            return 0;
        }
        if (spanner->parsed()) {
            ado::Graph g = ado::load_graph(spanner_input, ado::parse_format(spanner_format));
            ado::require_valid(g, "spanner");
            auto h = ado::build_spanner(g, spanner_k, spanner_seed);
            ado::write_graph(h.graph, spanner_out, ado::GraphFormat::kEdgeList);
            std::cout << "wrote " << spanner_out << ": kept " << h.graph.m() << " of " << g.m()
                      << " edges, stretch " << h.stretch() << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
