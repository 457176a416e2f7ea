#pragma once

#include <cstdint>
#include <string>

#include "ado/graph.hpp"

namespace ado {

/// Connected random graph: random recursive tree backbone plus extra
/// uniform edges up to ~m total. Weights uniform in [wmin, wmax].
Graph gen_gnm(VertexId n, std::uint64_t m, Weight wmin, Weight wmax, std::uint64_t seed);

/// rows x cols lattice with random weights.
Graph gen_grid(VertexId rows, VertexId cols, Weight wmin, Weight wmax, std::uint64_t seed);

/// Random tree plus `chords` extra uniform edges.
Graph gen_tree_chords(VertexId n, std::uint64_t chords, Weight wmin, Weight wmax,
                      std::uint64_t seed);

/// Preferential attachment: each new vertex attaches to `degree` targets
/// drawn proportional to current degree.
Graph gen_preferential(VertexId n, std::uint32_t degree, Weight wmin, Weight wmax,
                       std::uint64_t seed);

/// Simple path 0-1-...-(n-1) with constant weight.
Graph gen_path(VertexId n, Weight w = 1);

/// Dispatch by family name: gnm | grid | tree-chords | preferential | path.
/// `aux` is the family's density knob (m for gnm, chord count for
/// tree-chords, attach degree for preferential; ignored for grid and path;
/// 0 picks a default). Grids use the largest square with at most n vertices.
Graph generate_family(const std::string& family, VertexId n, std::uint64_t aux, Weight wmin,
                      Weight wmax, std::uint64_t seed);

}  // namespace ado
