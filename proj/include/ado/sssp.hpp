#pragma once

#include <cstdint>
#include <vector>

#include "ado/graph.hpp"
#include "ado/rational.hpp"
#include "ado/types.hpp"

namespace ado {

/// Single-source shortest-path result. Unreachable vertices carry kInfDist
/// and kNoVertex parents; sources have parent kNoVertex as well.
struct DistanceArray {
    VertexId source = kNoVertex;
    std::vector<Dist> dist;
    std::vector<VertexId> parent;
};

DistanceArray dijkstra(const Graph& g, VertexId source);

/// Multi-source shortest paths with lexicographic (distance, source id)
/// labels, so `nearest` always holds the smallest-id source among those at
/// minimum distance.
struct MultiSourceResult {
    std::vector<Dist> dist;
    std::vector<VertexId> nearest;
};

MultiSourceResult nearest_multi(const Graph& g, const std::vector<VertexId>& sources);

/// Nearest-sample assignment: p_S(u) and d_S(u) = d_G(u, p_S(u)) for a
/// sample set S, plus the sampling parameters that produced S (identity
/// exponent 0 when S was handed in directly).
struct SampleAssignment {
    std::vector<VertexId> sample;   // S, sorted ascending
    std::vector<VertexId> nearest;  // p_S per vertex
    std::vector<Dist> dist;         // d_S per vertex
    Rational exponent;              // i/k behind p = n^(-i/k)
    long double probability = 1.0L;

    bool in_sample(VertexId v) const { return dist[v] == 0; }
};

SampleAssignment nearest_sample(const Graph& g, std::vector<VertexId> sample);

/// One resampling-loop outcome. `rounds` is the 1-based index of the draw
/// that was kept; `accepted` records whether the acceptance predicate held
/// (false means a fallback round was used after the cap).
struct SampleDraw {
    SampleAssignment assignment;
    std::uint32_t rounds = 1;
    bool accepted = true;
};

/// Draws S with per-vertex probability p = n^(-exponent) and repeats with
/// derived seeds until p*n/2 <= |S| <= 2*p*n, S nonempty, and |E_S| <= 4*n/p.
/// After 100 failed rounds falls back to the smallest-|E_S| round inside the
/// |S| window, then to the smallest-|E_S| nonempty round, then to {0}.
SampleDraw sample_vertices(const Graph& g, const Rational& exponent, std::uint64_t seed);

/// G_S: keeps edge (v,x,w) iff w < d_S[v] or w < d_S[x]. Shares vertex ids
/// and labels with g.
Graph build_sparsified(const Graph& g, const SampleAssignment& sa);

}  // namespace ado
