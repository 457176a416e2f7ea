#include "ado/bench.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "ado/audit.hpp"
#include "ado/composite.hpp"
#include "ado/generators.hpp"
#include "ado/rng.hpp"

namespace ado {

namespace {

using nlohmann::json;

struct CellSpec {
    std::string family = "gnm";
    VertexId n = 0;
    std::uint64_t aux = 0;
    Weight wmin = 1;
    Weight wmax = 100;
    std::string kind = "tz";
    std::uint32_t k = 2;
    Rational epsilon = Rational(1);
    NearLinearMode mode = NearLinearMode::kPaperC;
    std::vector<std::uint64_t> seeds = {1};
    std::uint64_t pairs = 1000;
};

CellSpec parse_cell(const json& j, const json& root) {
    CellSpec c;
    c.family = j.value("family", std::string("gnm"));
    if (!j.contains("n")) throw std::runtime_error("scenario cell is missing 'n'");
    c.n = j.at("n").get<VertexId>();
    c.aux = j.value("aux", std::uint64_t{0});
    c.wmin = j.value("wmin", root.value("wmin", std::uint64_t{1}));
    c.wmax = j.value("wmax", root.value("wmax", std::uint64_t{100}));
    c.kind = j.value("kind", std::string("tz"));
    c.k = j.value("k", std::uint32_t{2});
    if (j.contains("epsilon")) c.epsilon = Rational::parse(j.at("epsilon").get<std::string>());
    if (j.contains("param_mode")) {
        auto mode = j.at("param_mode").get<std::string>();
        if (mode == "paper-c") c.mode = NearLinearMode::kPaperC;
        else if (mode == "large-k") c.mode = NearLinearMode::kLargeK;
        else throw std::runtime_error("scenario: unknown param_mode '" + mode + "'");
    }
    if (j.contains("seeds"))
        c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    else if (j.contains("seed"))
        c.seeds = {j.at("seed").get<std::uint64_t>()};
    c.pairs = j.value("pairs", root.value("pairs", std::uint64_t{1000}));
    return c;
}

// Stretch audits group pairs under few sources so each cell pays a bounded
// number of exact Dijkstra runs even at the largest sizes.
PairSample grouped_pairs(VertexId n, std::uint64_t total, std::uint64_t seed) {
    PairSample s;
    std::mt19937_64 engine(derive_seed(seed, SeedStream::kBench));
    std::uint64_t sources = std::min<std::uint64_t>(32, n);
    std::uint64_t per_source = std::max<std::uint64_t>(1, total / std::max<std::uint64_t>(1, sources));
    for (std::uint64_t i = 0; i < sources; ++i) {
        auto u = static_cast<VertexId>(engine() % n);
        for (std::uint64_t t = 0; t < per_source; ++t)
            s.pairs.push_back({u, static_cast<VertexId>(engine() % n)});
    }
    return s;
}

std::string format_ld(long double value) {
    std::ostringstream out;
    out.precision(6);
    out << std::fixed << static_cast<double>(value);
    return out.str();
}

}  // namespace

BenchOutput bench_run(const std::string& scenario_text) {
    json root;
    try {
        root = json::parse(scenario_text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("scenario parse error: ") + e.what());
    }
    if (!root.contains("cells") || !root.at("cells").is_array())
        throw std::runtime_error("scenario must contain a 'cells' array");

    BenchOutput out;
    std::ostringstream csv;
    csv << "family,n,m,kind,k,seed,build_seconds,sample_seconds,sparsify_seconds,"
           "inner_seconds,spanner_seconds,far_seconds,entries,sample_size,sample_rounds,"
           "sparsified_edges,spanner_edges,pairs,query_avg_ns,stretch_max,stretch_mean,"
           "violations,hard_violations\n";

    // (family, kind, k) -> n -> build seconds, for the growth fit
    std::map<std::tuple<std::string, std::string, std::uint32_t>,
             std::map<VertexId, std::vector<double>>>
        growth;

    for (const auto& cell_json : root.at("cells")) {
        CellSpec cell = parse_cell(cell_json, root);
        for (std::uint64_t seed : cell.seeds) {
            Graph g = generate_family(cell.family, cell.n, cell.aux, cell.wmin, cell.wmax, seed);

            auto t0 = std::chrono::steady_clock::now();
            CompositeOracle oracle;
            if (cell.kind == "tz")
                oracle = build_tz_oracle(g, cell.k, seed);
            else if (cell.kind == "warmup")
                oracle = build_warmup(g, cell.k, cell.epsilon, seed);
            else if (cell.kind == "small-k")
                oracle = build_small_k(g, cell.k, seed);
            else if (cell.kind == "near-linear")
                oracle = build_near_linear(g, cell.k, seed, cell.mode);
            else
                throw std::runtime_error("scenario: unknown oracle kind '" + cell.kind + "'");
            double build_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

            PairSample sample = grouped_pairs(g.n(), cell.pairs, seed);

            t0 = std::chrono::steady_clock::now();
            Dist sink = 0;
            for (const auto& [u, v] : sample.pairs) sink ^= oracle.query(u, v);
            double query_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            (void)sink;
            double query_avg_ns = sample.pairs.empty()
                                      ? 0.0
                                      : query_seconds * 1e9 / static_cast<double>(sample.pairs.size());

            AuditReport report = audit_oracle(oracle, g, sample);
            std::uint64_t hard = 0;
            for (const auto& violation : report.violations)
                if (violation.hard) ++hard;
            if (!report.ok()) out.ok = false;

            csv << cell.family << ',' << g.n() << ',' << g.m() << ',' << cell.kind << ','
                << cell.k << ',' << seed << ',' << format_ld(build_seconds) << ','
                << format_ld(oracle.info.seconds_sample) << ','
                << format_ld(oracle.info.seconds_sparsify) << ','
                << format_ld(oracle.info.seconds_inner) << ','
                << format_ld(oracle.info.seconds_spanner) << ','
                << format_ld(oracle.info.seconds_far) << ',' << report.entries << ','
                << oracle.info.sample_size << ',' << oracle.info.sample_rounds << ','
                << oracle.info.sparsified_edges << ',' << oracle.info.spanner_edges << ','
                << sample.pairs.size() << ',' << format_ld(query_avg_ns) << ','
                << format_ld(report.max_stretch) << ',' << format_ld(report.mean_stretch) << ','
                << report.violations.size() << ',' << hard << '\n';

            growth[{cell.family, cell.kind, cell.k}][g.n()].push_back(build_seconds);
        }
    }

    json summary;
    summary["ok"] = out.ok;
    summary["note"] = "fitted exponents describe measured build-time growth only; "
                      "they are informational, not pass/fail";
    summary["fits"] = json::array();
    for (const auto& [key, by_n] : growth) {
        if (by_n.size() < 2) continue;
        // least squares slope of ln(build_seconds) against ln(n)
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        double count = 0;
        for (const auto& [n, times] : by_n) {
            double mean = 0;
            for (double t : times) mean += t;
            mean /= static_cast<double>(times.size());
            double x = std::log(static_cast<double>(n));
            double y = std::log(std::max(mean, 1e-9));
            sx += x; sy += y; sxx += x * x; sxy += x * y;
            count += 1;
        }
        double denom = count * sxx - sx * sx;
        double slope = denom == 0 ? 0 : (count * sxy - sx * sy) / denom;
        json fit;
        fit["family"] = std::get<0>(key);
        fit["kind"] = std::get<1>(key);
        fit["k"] = std::get<2>(key);
        fit["sizes"] = by_n.size();
        fit["exponent"] = slope;
        summary["fits"].push_back(fit);
    }

    out.csv = csv.str();
    out.json_summary = summary.dump(2);
    return out;
}

BenchOutput bench_run_file(const std::string& scenario_path) {
    std::ifstream in(scenario_path);
    if (!in) throw std::runtime_error("cannot open scenario '" + scenario_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return bench_run(buffer.str());
}

}  // namespace ado
