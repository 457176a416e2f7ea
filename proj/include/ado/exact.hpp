#pragma once

#include <vector>

#include "ado/graph.hpp"
#include "ado/sssp.hpp"

namespace ado {

/// Dense all-pairs distance table; the audit ground truth at desk scale.
struct DistanceMatrix {
    VertexId n = 0;
    std::vector<Dist> cells;  // row-major

    Dist at(VertexId u, VertexId v) const {
        return cells[static_cast<std::size_t>(u) * n + v];
    }
};

/// Repeated Dijkstra from every source. Guarded to n <= 4096.
DistanceMatrix exact_oracle(const Graph& g);

/// Independent second ground truth (edge-relaxation fixpoint), used to
/// cross-check the Dijkstra implementation.
std::vector<Dist> bellman_ford(const Graph& g, VertexId source);

/// B_S(u) = {v : d_G(u,v) < d_G(u, p_S(u))}. Proof-side predicate used by
/// tests; never materialized during builds.
std::vector<VertexId> ball_B_S(const Graph& g, const SampleAssignment& sa, VertexId u);

}  // namespace ado
