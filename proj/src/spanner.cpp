#include "ado/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "ado/rng.hpp"

namespace ado {

long double SpannerSubgraph::size_constant() const {
    if (graph.n() == 0) return 0.0L;
    long double n = static_cast<long double>(graph.n());
    long double budget = static_cast<long double>(k_prime) *
                         std::pow(n, 1.0L + 1.0L / static_cast<long double>(k_prime));
    return static_cast<long double>(graph.m()) / budget;
}

namespace {

struct GroupBest {
    Weight w = kInfDist;
    VertexId neighbor = kNoVertex;
    std::uint64_t edge = 0;

    bool beats(Weight cw, VertexId cn) const {
        return std::make_pair(cw, cn) < std::make_pair(w, neighbor);
    }
};

}  // namespace

SpannerSubgraph build_spanner(const Graph& g, std::uint32_t k_prime, std::uint64_t seed) {
    if (k_prime < 1) throw std::invalid_argument("build_spanner: k' must be >= 1");

    SpannerSubgraph out;
    out.k_prime = k_prime;
    if (k_prime == 1 || g.n() <= 1) {
        out.graph = g;
        return out;
    }

    const VertexId n = g.n();
    const auto edges = g.edges();
    // adjacency over undirected edge indices, sorted by neighbor id
    std::vector<std::vector<std::pair<VertexId, std::uint64_t>>> adj(n);
    for (std::uint64_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].u].push_back({edges[e].v, e});
        adj[edges[e].v].push_back({edges[e].u, e});
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    std::vector<char> alive(edges.size(), 1);
    std::vector<char> in_spanner(edges.size(), 0);
    std::vector<VertexId> center(n);
    for (VertexId v = 0; v < n; ++v) center[v] = v;

    const std::uint64_t threshold = bernoulli_threshold(
        std::pow(static_cast<long double>(n), -1.0L / static_cast<long double>(k_prime)));

    for (std::uint32_t round = 0; round + 1 < k_prime; ++round) {
        std::mt19937_64 engine(derive_seed(seed, SeedStream::kSpannerClusters, round));
        std::vector<char> sampled(n, 0);
        for (VertexId v = 0; v < n; ++v) sampled[v] = bernoulli_draw(engine, threshold) ? 1 : 0;

        // Vertices read the clustering and edge set as they stood at the
        // start of the round; removals take effect when the round ends.
        const std::vector<VertexId> snapshot_center = center;
        std::vector<char> next_alive = alive;
        std::vector<VertexId> next_center = center;

        for (VertexId v = 0; v < n; ++v) {
            if (snapshot_center[v] == kNoVertex) continue;  // retired earlier
            if (sampled[snapshot_center[v]]) continue;      // cluster survives as is

            std::map<VertexId, GroupBest> groups;  // neighbor cluster -> lightest edge
            for (const auto& [u, e] : adj[v]) {
                if (!alive[e]) continue;
                VertexId c = snapshot_center[u];
                auto& best = groups[c];
                if (best.beats(edges[e].w, u)) best = {edges[e].w, u, e};
            }

            GroupBest join;
            VertexId join_cluster = kNoVertex;
            for (const auto& [c, best] : groups)
                if (sampled[c] && join.beats(best.w, best.neighbor)) {
                    join = best;
                    join_cluster = c;
                }

            if (join_cluster == kNoVertex) {
                // no sampled cluster in reach: keep one edge per neighboring
                // cluster, then retire v from the clustering
                for (const auto& [c, best] : groups) in_spanner[best.edge] = 1;
                for (const auto& [u, e] : adj[v]) next_alive[e] = 0;
                next_center[v] = kNoVertex;
                continue;
            }

            in_spanner[join.edge] = 1;
            next_center[v] = join_cluster;
            for (const auto& [c, best] : groups) {
                if (c == join_cluster) {
                    for (const auto& [u, e] : adj[v])
                        if (alive[e] && snapshot_center[u] == c) next_alive[e] = 0;
                } else if (best.w < join.w) {
                    in_spanner[best.edge] = 1;
                    for (const auto& [u, e] : adj[v])
                        if (alive[e] && snapshot_center[u] == c) next_alive[e] = 0;
                }
            }
        }

        center = std::move(next_center);
        alive = std::move(next_alive);
        for (std::uint64_t e = 0; e < edges.size(); ++e)
            if (alive[e] && center[edges[e].u] != kNoVertex &&
                center[edges[e].u] == center[edges[e].v])
                alive[e] = 0;
    }

    // last round: every vertex keeps its lightest edge to each adjacent cluster
    for (VertexId v = 0; v < n; ++v) {
        std::map<VertexId, GroupBest> groups;
        for (const auto& [u, e] : adj[v]) {
            if (!alive[e]) continue;
            VertexId c = center[u];
            if (c == kNoVertex) continue;  // retired vertices hold no live edges
            auto& best = groups[c];
            if (best.beats(edges[e].w, u)) best = {edges[e].w, u, e};
        }
        for (const auto& [c, best] : groups) in_spanner[best.edge] = 1;
    }

    std::vector<RawEdge> kept;
    for (std::uint64_t e = 0; e < edges.size(); ++e)
        if (in_spanner[e]) kept.push_back(edges[e]);
    out.graph = Graph::from_edges(n, std::move(kept), g.labels());
    return out;
}

}  // namespace ado
