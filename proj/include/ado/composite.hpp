#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ado/graph.hpp"
#include "ado/params.hpp"
#include "ado/rational.hpp"
#include "ado/sssp.hpp"
#include "ado/tz_oracle.hpp"

namespace ado {

enum class OracleKind : std::uint8_t {
    kTz = 0,
    kWarmup = 1,
    kSmallK = 2,
    kNearLinear = 3,
};

const char* kind_name(OracleKind kind);
OracleKind parse_kind(const std::string& name);

/// Build metadata. Informational only: excluded from serialization so a
/// round trip is byte-identical across machines.
struct BuildInfo {
    std::uint32_t sample_rounds = 0;
    bool sample_accepted = true;
    std::uint64_t sample_size = 0;
    std::uint64_t sparsified_edges = 0;
    std::uint64_t spanner_edges = 0;
    double seconds_sample = 0.0;
    double seconds_sparsify = 0.0;
    double seconds_inner = 0.0;
    double seconds_spanner = 0.0;
    double seconds_far = 0.0;
    double seconds_total = 0.0;
};

/// Exact S x S distances inside the spanner, row-major over sample slots.
struct FarTable {
    std::uint32_t side = 0;
    std::vector<Dist> cells;

    Dist at(std::uint32_t a, std::uint32_t b) const {
        return cells[static_cast<std::size_t>(a) * side + b];
    }
};

/// A fully assembled oracle: a Thorup-Zwick oracle over the sparsified
/// graph plus a far estimate through the nearest samples — an exact S x S
/// table in the spanner, or a restricted oracle over the spanner. Plain TZ
/// and the warmup construction are carried in the same shell with the far
/// side empty.
struct CompositeOracle {
    OracleKind kind = OracleKind::kTz;       // what was actually built
    OracleKind requested = OracleKind::kTz;  // what the caller asked for
    bool fallback = false;
    NearLinearMode param_mode = NearLinearMode::kPaperC;
    VertexId n = 0;
    std::uint64_t seed = 0;
    std::uint32_t k = 1;         // stretch parameter (kappa for plain TZ)
    std::uint32_t k_prime = 0;   // spanner parameter; 0 = no spanner stage
    std::uint32_t far_kappa = 0; // restricted-oracle level count; 0 = table/none
    Rational epsilon;            // warmup only
    Rational exponent;           // the i behind p = n^(-i/k); 0 = no sampling
    std::uint64_t certificate = 1;  // certified stretch bound
    std::vector<std::uint64_t> labels;

    SampleAssignment assignment;  // empty sample when there is no sampling stage
    TZOracle inner;
    FarTable far;          // small-k far side
    TZOracle far_oracle;   // near-linear far side
    BuildInfo info;

    /// min(d1, d2): the inner-oracle estimate and the through-the-samples
    /// estimate d_S[u] + far(p_S(u), p_S(v)) + d_S[v]. Symmetric; never
    /// below the exact distance; at most certificate * exact.
    Dist query(VertexId u, VertexId v) const;

    /// Position of sample vertex s inside the sorted sample list.
    std::uint32_t sample_index(VertexId s) const;

    /// Stored entries: inner bunches+pivots, far cells or far oracle
    /// entries, and the sample arrays.
    std::uint64_t stored_entries() const;
};

CompositeOracle build_tz_oracle(const Graph& g, std::uint32_t kappa, std::uint64_t seed);
CompositeOracle build_warmup(const Graph& g, std::uint32_t k, const Rational& epsilon,
                             std::uint64_t seed);
CompositeOracle build_small_k(const Graph& g, std::uint32_t k, std::uint64_t seed);
CompositeOracle build_near_linear(const Graph& g, std::uint32_t k, std::uint64_t seed,
                                  NearLinearMode mode = NearLinearMode::kPaperC);

std::vector<std::uint8_t> serialize(const CompositeOracle& o);
CompositeOracle deserialize(const std::vector<std::uint8_t>& bytes);
void save_oracle(const CompositeOracle& o, const std::string& path);
CompositeOracle load_oracle(const std::string& path);

}  // namespace ado
