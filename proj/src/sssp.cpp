#include "ado/sssp.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "ado/rng.hpp"

namespace ado {

DistanceArray dijkstra(const Graph& g, VertexId source) {
    if (source >= g.n()) throw std::invalid_argument("dijkstra: source out of range");
    DistanceArray out;
    out.source = source;
    out.dist.assign(g.n(), kInfDist);
    out.parent.assign(g.n(), kNoVertex);
    out.dist[source] = 0;

    using Entry = std::pair<Dist, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    heap.push({0, source});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d != out.dist[u]) continue;  // stale entry
        for (auto e = g.first_edge(u); e < g.end_edge(u); ++e) {
            VertexId v = g.target(e);
            Dist nd = d + g.weight(e);
            if (nd < out.dist[v]) {
                out.dist[v] = nd;
                out.parent[v] = u;
                heap.push({nd, v});
            }
        }
    }
    return out;
}

MultiSourceResult nearest_multi(const Graph& g, const std::vector<VertexId>& sources) {
    MultiSourceResult out;
    out.dist.assign(g.n(), kInfDist);
    out.nearest.assign(g.n(), kNoVertex);

    // Lexicographic labels (dist, source): addition of an edge weight is
    // monotone in this order, so Dijkstra settles each vertex with the
    // smallest-id source among those at minimum distance.
    using Entry = std::tuple<Dist, VertexId, VertexId>;  // (dist, source, vertex)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (VertexId s : sources) {
        if (s >= g.n()) throw std::invalid_argument("nearest_multi: source out of range");
        if (std::make_pair(Dist{0}, s) <
            std::make_pair(out.dist[s], out.nearest[s])) {
            out.dist[s] = 0;
            out.nearest[s] = s;
            heap.push({0, s, s});
        }
    }
    while (!heap.empty()) {
        auto [d, src, u] = heap.top();
        heap.pop();
        if (std::make_pair(d, src) != std::make_pair(out.dist[u], out.nearest[u])) continue;
        for (auto e = g.first_edge(u); e < g.end_edge(u); ++e) {
            VertexId v = g.target(e);
            Dist nd = d + g.weight(e);
            if (std::make_pair(nd, src) < std::make_pair(out.dist[v], out.nearest[v])) {
                out.dist[v] = nd;
                out.nearest[v] = src;
                heap.push({nd, src, v});
            }
        }
    }
    return out;
}

SampleAssignment nearest_sample(const Graph& g, std::vector<VertexId> sample) {
    if (sample.empty()) throw std::invalid_argument("nearest_sample: empty sample set");
    std::sort(sample.begin(), sample.end());
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());

    auto ms = nearest_multi(g, sample);
    SampleAssignment sa;
    sa.sample = std::move(sample);
    sa.nearest = std::move(ms.nearest);
    sa.dist = std::move(ms.dist);
    return sa;
}

Graph build_sparsified(const Graph& g, const SampleAssignment& sa) {
    if (sa.dist.size() != g.n())
        throw std::invalid_argument("build_sparsified: assignment does not match graph");
    std::vector<RawEdge> kept;
    for (const auto& e : g.edges())
        if (e.w < sa.dist[e.u] || e.w < sa.dist[e.v]) kept.push_back(e);
    return Graph::from_edges(g.n(), std::move(kept), g.labels());
}

SampleDraw sample_vertices(const Graph& g, const Rational& exponent, std::uint64_t seed) {
    if (!(Rational(0) <= exponent && exponent <= Rational(1)))
        throw std::invalid_argument("sample_vertices: exponent must lie in [0, 1]");
    if (g.n() == 0) throw std::invalid_argument("sample_vertices: empty graph");

    const long double n = static_cast<long double>(g.n());
    const long double p = std::pow(n, -exponent.value());
    const std::uint64_t threshold = bernoulli_threshold(p);
    const long double size_lo = p * n / 2.0L;
    const long double size_hi = 2.0L * p * n;
    const long double edge_cap = 4.0L * n / p;

    constexpr std::uint32_t kMaxRounds = 100;

    struct Candidate {
        std::uint64_t edge_count = ~std::uint64_t{0};
        std::uint32_t round = 0;
        std::vector<VertexId> sample;
        bool present() const { return !sample.empty(); }
    };
    Candidate best_window, best_any;

    auto finish = [&](std::vector<VertexId> sample, std::uint32_t round, bool accepted) {
        SampleDraw draw;
        draw.assignment = nearest_sample(g, std::move(sample));
        draw.assignment.exponent = exponent;
        draw.assignment.probability = p;
        draw.rounds = round;
        draw.accepted = accepted;
        return draw;
    };

    for (std::uint32_t round = 0; round < kMaxRounds; ++round) {
        std::mt19937_64 engine(derive_seed(seed, SeedStream::kSampleRound, round));
        std::vector<VertexId> sample;
        for (VertexId v = 0; v < g.n(); ++v)
            if (bernoulli_draw(engine, threshold)) sample.push_back(v);
        if (sample.empty()) continue;

        const long double count = static_cast<long double>(sample.size());
        const bool in_window = size_lo <= count && count <= size_hi;

        auto sa = nearest_sample(g, sample);
        std::uint64_t edge_count = 0;
        for (const auto& e : g.edges())
            if (e.w < sa.dist[e.u] || e.w < sa.dist[e.v]) ++edge_count;

        if (in_window && static_cast<long double>(edge_count) <= edge_cap)
            return finish(std::move(sample), round + 1, true);

        if (in_window && edge_count < best_window.edge_count)
            best_window = {edge_count, round + 1, sample};
        if (edge_count < best_any.edge_count)
            best_any = {edge_count, round + 1, std::move(sample)};
    }

    if (best_window.present())
        return finish(std::move(best_window.sample), best_window.round, false);
    if (best_any.present())
        return finish(std::move(best_any.sample), best_any.round, false);
    return finish({0}, kMaxRounds, false);
}

}  // namespace ado
