#pragma once

#include <cstdint>

#include "ado/graph.hpp"

namespace ado {

/// A (2k'-1)-spanner of a base graph. `graph` shares vertex ids and labels
/// with the base; its edge set is a subset of the base edge set.
struct SpannerSubgraph {
    Graph graph;
    std::uint32_t k_prime = 1;

    std::uint64_t stretch() const { return 2ull * k_prime - 1; }
    // Measured size constant |E_H| / (k' * n^(1 + 1/k')).
    long double size_constant() const;
};

/// Randomized cluster-based spanner construction. k'-1 rounds of cluster
/// sampling with probability n^(-1/k'): a vertex adjacent to no sampled
/// cluster adds its lightest edge to every neighboring cluster and retires
/// its edges; otherwise it joins the nearest sampled cluster and also adds
/// the lightest edge to every cluster seen through a strictly lighter edge.
/// A final round connects every vertex to each adjacent surviving cluster.
/// k' = 1 returns the whole edge set. Deterministic per (g, k_prime, seed).
SpannerSubgraph build_spanner(const Graph& g, std::uint32_t k_prime, std::uint64_t seed);

}  // namespace ado
