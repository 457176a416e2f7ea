#pragma once

#include <cstdint>
#include <vector>

#include "ado/graph.hpp"

namespace ado {

/// Build-time knobs for the Thorup-Zwick oracle.
struct TZOptions {
    /// Store pivots and bunches only for these vertices (empty = all).
    /// Queries are then restricted to pairs inside this set.
    std::vector<VertexId> restriction;
    /// Explicit A_1..A_{kappa-1} for deterministic tests; production builds
    /// leave this empty and sample levels from the seed.
    std::vector<std::vector<VertexId>> injected_levels;
    /// When false the built graph may be disconnected (e.g. a sparsified
    /// subgraph) and queries return kInfDist for separated pairs instead of
    /// treating exhaustion of the alternation as a logic error.
    bool base_connected = true;
};

struct BunchEntry {
    VertexId w = kNoVertex;
    Dist d = kInfDist;
};

/// Thorup-Zwick distance oracle: nested level sets A_0..A_{kappa-1}, per
/// vertex pivots p_i(v) with d(A_i, v), and bunches holding exact distances.
/// Estimates satisfy d(u,v) <= query(u,v) <= (2*kappa-1)*d(u,v).
struct TZOracle {
    VertexId n = 0;
    std::uint32_t kappa = 1;            // effective level count
    std::uint32_t requested_kappa = 1;  // before any fallback
    bool base_connected = true;
    bool restricted = false;

    std::vector<std::vector<VertexId>> levels;  // A_0..A_{kappa-1}, each sorted
    std::vector<std::uint16_t> top_level;       // max i with v in A_i
    std::vector<VertexId> stored;               // vertices with pivots+bunches, sorted
    std::vector<VertexId> slot;                 // v -> index into stored, kNoVertex if absent

    // pivots laid out slot-major: index slot*kappa + i
    std::vector<VertexId> pivot_vertex;
    std::vector<Dist> pivot_dist;
    std::vector<std::vector<BunchEntry>> bunches;  // per slot, sorted by w

    bool stores(VertexId v) const { return v < slot.size() && slot[v] != kNoVertex; }
    VertexId pivot(std::uint32_t i, VertexId v) const {
        return pivot_vertex[static_cast<std::size_t>(slot[v]) * kappa + i];
    }
    Dist pivot_distance(std::uint32_t i, VertexId v) const {
        return pivot_dist[static_cast<std::size_t>(slot[v]) * kappa + i];
    }
    const std::vector<BunchEntry>& bunch(VertexId v) const { return bunches[slot[v]]; }

    /// d(w, v) when w lies in B(v), kInfDist otherwise.
    Dist bunch_lookup(VertexId v, VertexId w) const;

    /// Alternating query. Endpoints are canonicalized (smaller id first), so
    /// the result is symmetric. Throws std::logic_error if the alternation
    /// exhausts all levels on a connected base; returns kInfDist for pairs
    /// separated in a disconnected base.
    Dist query(VertexId u, VertexId v) const;

    std::uint64_t bunch_entries() const;
    std::uint64_t stored_entries() const;  // bunch entries + pivot slots
};

/// Builds the oracle. Levels are resampled with derived seeds until
/// A_{kappa-1} is nonempty (100 rounds, then the level count drops by one,
/// which only improves stretch). Requires strictly positive weights;
/// additionally requires connectivity when opts.base_connected is true.
TZOracle build_tz(const Graph& g, std::uint32_t kappa, std::uint64_t seed,
                  const TZOptions& opts = {});

}  // namespace ado
