#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ado/composite.hpp"
#include "ado/graph.hpp"

namespace ado {

/// Query pairs to audit: exhaustive (guarded to n <= 1024) or a seeded
/// uniform sample.
struct PairSample {
    bool all_pairs = false;
    std::vector<std::pair<VertexId, VertexId>> pairs;

    static PairSample all(VertexId n);
    static PairSample random(VertexId n, std::uint64_t count, std::uint64_t seed);
};

struct StretchViolation {
    VertexId u = 0;
    VertexId v = 0;
    Dist exact = 0;
    Dist estimate = 0;
    bool hard = false;  // estimate below the exact distance
};

struct AuditReport {
    std::string oracle;
    std::uint64_t bound = 1;  // certified stretch
    std::uint64_t pairs_audited = 0;
    std::uint64_t finite_pairs = 0;
    long double max_stretch = 0.0L;
    long double mean_stretch = 0.0L;
    std::vector<StretchViolation> violations;
    // size fragment (filled by audit_size)
    std::uint64_t entries = 0;
    long double budget = 0.0L;
    bool size_within_budget = true;

    bool ok() const { return violations.empty(); }
};

using QueryFn = std::function<Dist(VertexId, VertexId)>;

/// Compares estimates against exact distances (cached per-source Dijkstra
/// rows). Every estimate must land in [exact, bound*exact]; anything below
/// exact is flagged as a hard violation.
AuditReport audit_stretch(const QueryFn& query, std::uint64_t bound, const Graph& g,
                          const PairSample& pairs, const std::string& name = {});

/// Counts stored entries and compares against 10*k*n^(1+1/k); for the
/// near-linear far oracle additionally against 10*kappa*|S|*n^(1/kappa).
void audit_size(const CompositeOracle& o, AuditReport& report);

AuditReport audit_oracle(const CompositeOracle& o, const Graph& g, const PairSample& pairs);

}  // namespace ado
