#include "ado/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace ado {

DistanceMatrix exact_oracle(const Graph& g) {
    if (g.n() > 4096)
        throw std::invalid_argument("exact_oracle: graph exceeds the n <= 4096 guard");
    DistanceMatrix table;
    table.n = g.n();
    table.cells.resize(static_cast<std::size_t>(g.n()) * g.n());
    for (VertexId s = 0; s < g.n(); ++s) {
        auto row = dijkstra(g, s);
        std::copy(row.dist.begin(), row.dist.end(),
                  table.cells.begin() + static_cast<std::size_t>(s) * g.n());
    }
    return table;
}

std::vector<Dist> bellman_ford(const Graph& g, VertexId source) {
    if (source >= g.n()) throw std::invalid_argument("bellman_ford: source out of range");
    std::vector<Dist> dist(g.n(), kInfDist);
    dist[source] = 0;
    const auto edges = g.edges();
    for (VertexId pass = 0; pass + 1 < g.n() || pass == 0; ++pass) {
        bool changed = false;
        for (const auto& e : edges) {
            if (dist[e.u] != kInfDist && dist[e.u] + e.w < dist[e.v]) {
                dist[e.v] = dist[e.u] + e.w;
                changed = true;
            }
            if (dist[e.v] != kInfDist && dist[e.v] + e.w < dist[e.u]) {
                dist[e.u] = dist[e.v] + e.w;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return dist;
}

std::vector<VertexId> ball_B_S(const Graph& g, const SampleAssignment& sa, VertexId u) {
    if (u >= g.n()) throw std::invalid_argument("ball_B_S: vertex out of range");
    auto row = dijkstra(g, u);
    std::vector<VertexId> ball;
    for (VertexId v = 0; v < g.n(); ++v)
        if (row.dist[v] < sa.dist[u]) ball.push_back(v);
    return ball;
}

}  // namespace ado
