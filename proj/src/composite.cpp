#include "ado/composite.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "ado/rng.hpp"
#include "ado/spanner.hpp"

namespace ado {

const char* kind_name(OracleKind kind) {
    switch (kind) {
        case OracleKind::kTz: return "tz";
        case OracleKind::kWarmup: return "warmup";
        case OracleKind::kSmallK: return "small-k";
        case OracleKind::kNearLinear: return "near-linear";
    }
    return "unknown";
}

OracleKind parse_kind(const std::string& name) {
    if (name == "tz") return OracleKind::kTz;
    if (name == "warmup") return OracleKind::kWarmup;
    if (name == "small-k" || name == "smallk") return OracleKind::kSmallK;
    if (name == "near-linear" || name == "nearlinear") return OracleKind::kNearLinear;
    throw std::invalid_argument("unknown oracle kind '" + name + "'");
}

std::uint32_t CompositeOracle::sample_index(VertexId s) const {
    auto it = std::lower_bound(assignment.sample.begin(), assignment.sample.end(), s);
    if (it == assignment.sample.end() || *it != s)
        throw std::logic_error("composite oracle: vertex is not a sample");
    return static_cast<std::uint32_t>(it - assignment.sample.begin());
}

Dist CompositeOracle::query(VertexId u, VertexId v) const {
    if (u >= n || v >= n) throw std::invalid_argument("composite_query: vertex out of range");
    if (u == v) return 0;
    if (kind == OracleKind::kTz || kind == OracleKind::kWarmup) return inner.query(u, v);

    Dist d1 = inner.query(u, v);  // kInfDist when G_S separates the pair
    VertexId pu = assignment.nearest[u];
    VertexId pv = assignment.nearest[v];
    Dist through = kind == OracleKind::kSmallK
                       ? far.at(sample_index(pu), sample_index(pv))
                       : far_oracle.query(pu, pv);
    Dist d2 = dist_add(assignment.dist[u], through, assignment.dist[v]);
    return std::min(d1, d2);
}

std::uint64_t CompositeOracle::stored_entries() const {
    std::uint64_t total = inner.stored_entries();
    if (kind == OracleKind::kSmallK)
        total += static_cast<std::uint64_t>(far.side) * far.side;
    else if (kind == OracleKind::kNearLinear)
        total += far_oracle.stored_entries();
    if (!assignment.sample.empty())
        total += assignment.sample.size() + 2ull * n;  // S plus p_S and d_S arrays
    return total;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Shared sampling + sparsification + inner-oracle pipeline.
void run_sampled_pipeline(CompositeOracle& o, const Graph& g, const Rational& i,
                          std::uint32_t inner_kappa, std::uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    SampleDraw draw = sample_vertices(g, i / Rational(o.k), seed);
    o.assignment = std::move(draw.assignment);
    o.info.sample_rounds = draw.rounds;
    o.info.sample_accepted = draw.accepted;
    o.info.sample_size = o.assignment.sample.size();
    o.info.seconds_sample = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    Graph sparsified = build_sparsified(g, o.assignment);
    o.info.sparsified_edges = sparsified.m();
    o.info.seconds_sparsify = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    TZOptions inner_opts;
    inner_opts.base_connected = false;  // G_S is usually disconnected
    o.inner = build_tz(sparsified, inner_kappa,
                       derive_seed(seed, SeedStream::kCompositeInner), inner_opts);
    o.info.seconds_inner = seconds_since(t0);
}

}  // namespace

CompositeOracle build_tz_oracle(const Graph& g, std::uint32_t kappa, std::uint64_t seed) {
    require_valid(g, "build_tz_oracle");
    auto total0 = std::chrono::steady_clock::now();
    CompositeOracle o;
    o.kind = o.requested = OracleKind::kTz;
    o.n = g.n();
    o.seed = seed;
    o.k = kappa;
    o.labels = g.labels();

    auto t0 = std::chrono::steady_clock::now();
    o.inner = build_tz(g, kappa, derive_seed(seed, SeedStream::kCompositeInner));
    o.info.seconds_inner = seconds_since(t0);
    o.certificate = 2ull * o.inner.kappa - 1;
    o.info.seconds_total = seconds_since(total0);
    return o;
}

CompositeOracle build_warmup(const Graph& g, std::uint32_t k, const Rational& epsilon,
                             std::uint64_t seed) {
    require_valid(g, "build_warmup");
    if (k < 1) throw std::invalid_argument("build_warmup: k must be >= 1");
    if (!epsilon.positive()) throw std::invalid_argument("build_warmup: epsilon must be > 0");

    auto total0 = std::chrono::steady_clock::now();
    CompositeOracle o;
    o.kind = o.requested = OracleKind::kWarmup;
    o.n = g.n();
    o.seed = seed;
    o.k = k;
    o.epsilon = epsilon;
    o.labels = g.labels();

    // ceil(1/eps), then the smallest t with 2t-1 >= that (so the spanner
    // stretch stays within ceil(1/eps) + 1)
    std::int64_t ceil_inv = (epsilon.den() + epsilon.num() - 1) / epsilon.num();
    o.k_prime = static_cast<std::uint32_t>((ceil_inv + 2) / 2);

    auto t0 = std::chrono::steady_clock::now();
    SpannerSubgraph h = build_spanner(g, o.k_prime, seed);
    o.info.spanner_edges = h.graph.m();
    o.info.seconds_spanner = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    o.inner = build_tz(h.graph, k, derive_seed(seed, SeedStream::kCompositeInner));
    o.info.seconds_inner = seconds_since(t0);

    o.certificate = (2ull * o.inner.kappa - 1) * h.stretch();
    o.info.seconds_total = seconds_since(total0);
    return o;
}

CompositeOracle build_small_k(const Graph& g, std::uint32_t k, std::uint64_t seed) {
    require_valid(g, "build_small_k");
    ParamsSmallK params = select_params_small_k(k);

    auto total0 = std::chrono::steady_clock::now();
    CompositeOracle o;
    o.kind = o.requested = OracleKind::kSmallK;
    o.n = g.n();
    o.seed = seed;
    o.k = k;
    o.k_prime = params.k_prime;
    o.exponent = params.i;
    o.labels = g.labels();

    run_sampled_pipeline(o, g, params.i, k, seed);

    auto t0 = std::chrono::steady_clock::now();
    SpannerSubgraph h = build_spanner(g, params.k_prime, seed);
    o.info.spanner_edges = h.graph.m();
    o.info.seconds_spanner = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto& sample = o.assignment.sample;
    o.far.side = static_cast<std::uint32_t>(sample.size());
    o.far.cells.assign(static_cast<std::size_t>(o.far.side) * o.far.side, 0);
    for (std::uint32_t a = 0; a < o.far.side; ++a) {
        auto row = dijkstra(h.graph, sample[a]);
        for (std::uint32_t b = 0; b < o.far.side; ++b)
            o.far.cells[static_cast<std::size_t>(a) * o.far.side + b] = row.dist[sample[b]];
    }
    o.info.seconds_far = seconds_since(t0);

    o.certificate = 2ull * k - 1;
    o.info.seconds_total = seconds_since(total0);
    return o;
}

CompositeOracle build_near_linear(const Graph& g, std::uint32_t k, std::uint64_t seed,
                                  NearLinearMode mode) {
    require_valid(g, "build_near_linear");
    ParamsNearLinear params = select_params_near_linear(k, mode);

    if (!params.feasible) {
        // The parameter rule yields no usable (kappa, i, k'); delegate and
        // record which oracle actually got built.
        CompositeOracle o = k >= 3 ? build_small_k(g, k, seed)
                                   : build_tz_oracle(g, k, seed);
        o.requested = OracleKind::kNearLinear;
        o.param_mode = mode;
        o.fallback = true;
        return o;
    }

    auto total0 = std::chrono::steady_clock::now();
    CompositeOracle o;
    o.kind = o.requested = OracleKind::kNearLinear;
    o.param_mode = mode;
    o.n = g.n();
    o.seed = seed;
    o.k = k;
    o.k_prime = params.k_prime;
    o.far_kappa = params.kappa;
    o.exponent = params.i;
    o.labels = g.labels();

    run_sampled_pipeline(o, g, params.i, k, seed);

    auto t0 = std::chrono::steady_clock::now();
    SpannerSubgraph h = build_spanner(g, params.k_prime, seed);
    o.info.spanner_edges = h.graph.m();
    o.info.seconds_spanner = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    TZOptions far_opts;
    far_opts.restriction = o.assignment.sample;
    o.far_oracle = build_tz(h.graph, params.kappa,
                            derive_seed(seed, SeedStream::kCompositeFar), far_opts);
    o.info.seconds_far = seconds_since(t0);

    o.certificate = params.certificate();
    o.info.seconds_total = seconds_since(total0);
    return o;
}

}  // namespace ado
