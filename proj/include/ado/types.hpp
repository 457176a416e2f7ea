#pragma once

#include <cstdint>
#include <limits>

namespace ado {

using VertexId = std::uint32_t;
using Weight = std::uint64_t;
using Dist = std::uint64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr Dist kInfDist = std::numeric_limits<Dist>::max();

// Ingestion cap on n * max_edge_weight. Any simple path then sums below
// 2^61, and a three-leg estimate (d_S[u] + d_H + d_S[v]) stays below 2^63.
inline constexpr std::uint64_t kWeightCap = std::uint64_t{1} << 61;

inline Dist dist_add(Dist a, Dist b) {
    if (a == kInfDist || b == kInfDist) return kInfDist;
    return a + b;
}

inline Dist dist_add(Dist a, Dist b, Dist c) { return dist_add(dist_add(a, b), c); }

}  // namespace ado
