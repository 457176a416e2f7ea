#include "ado/audit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ado/rng.hpp"
#include "ado/sssp.hpp"

namespace ado {

PairSample PairSample::all(VertexId n) {
    if (n > 1024)
        throw std::invalid_argument("PairSample::all: exhaustive audits are capped at n <= 1024");
    PairSample s;
    s.all_pairs = true;
    s.pairs.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u; v < n; ++v) s.pairs.push_back({u, v});
    return s;
}

PairSample PairSample::random(VertexId n, std::uint64_t count, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("PairSample::random: empty vertex set");
    PairSample s;
    s.pairs.reserve(count);
    std::mt19937_64 engine(derive_seed(seed, SeedStream::kPairSample));
    for (std::uint64_t i = 0; i < count; ++i) {
        auto u = static_cast<VertexId>(engine() % n);
        auto v = static_cast<VertexId>(engine() % n);
        s.pairs.push_back({u, v});
    }
    return s;
}

AuditReport audit_stretch(const QueryFn& query, std::uint64_t bound, const Graph& g,
                          const PairSample& pairs, const std::string& name) {
    AuditReport report;
    report.oracle = name;
    report.bound = bound;
    report.pairs_audited = pairs.pairs.size();

    // one Dijkstra row at a time, pairs grouped by source
    std::vector<std::uint64_t> order(pairs.pairs.size());
    for (std::uint64_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        return pairs.pairs[a].first < pairs.pairs[b].first;
    });

    std::vector<Dist> row;
    VertexId row_source = kNoVertex;
    long double sum_stretch = 0.0L;
    for (std::uint64_t idx : order) {
        auto [u, v] = pairs.pairs[idx];
        if (u != row_source) {
            row = dijkstra(g, u).dist;
            row_source = u;
        }
        Dist exact = row[v];
        Dist estimate = query(u, v);

        if (estimate < exact) {
            report.violations.push_back({u, v, exact, estimate, true});
            continue;
        }
        if (exact == kInfDist) continue;  // separated pair, estimate agreed
        ++report.finite_pairs;
        if (exact == 0) {
            if (estimate > 0) report.violations.push_back({u, v, exact, estimate, false});
            sum_stretch += 1.0L;
            report.max_stretch = std::max(report.max_stretch, 1.0L);
            continue;
        }
        using u128 = unsigned __int128;
        if (u128(estimate) > u128(bound) * u128(exact))
            report.violations.push_back({u, v, exact, estimate, false});
        long double stretch =
            static_cast<long double>(estimate) / static_cast<long double>(exact);
        sum_stretch += stretch;
        report.max_stretch = std::max(report.max_stretch, stretch);
    }
    if (report.finite_pairs > 0)
        report.mean_stretch = sum_stretch / static_cast<long double>(report.finite_pairs);
    return report;
}

void audit_size(const CompositeOracle& o, AuditReport& report) {
    report.entries = o.stored_entries();
    const long double n = static_cast<long double>(o.n);
    const long double k = static_cast<long double>(o.k);
    report.budget = 10.0L * k * std::pow(n, 1.0L + 1.0L / k);
    report.size_within_budget = static_cast<long double>(report.entries) <= report.budget;
    if (o.kind == OracleKind::kNearLinear) {
        const long double kap = static_cast<long double>(o.far_kappa);
        const long double s = static_cast<long double>(o.assignment.sample.size());
        long double far_budget = 10.0L * kap * s * std::pow(n, 1.0L / kap);
        if (static_cast<long double>(o.far_oracle.stored_entries()) > far_budget)
            report.size_within_budget = false;
    }
}

AuditReport audit_oracle(const CompositeOracle& o, const Graph& g, const PairSample& pairs) {
    if (g.n() != o.n)
        throw std::invalid_argument("audit_oracle: graph does not match the oracle");
    AuditReport report = audit_stretch(
        [&o](VertexId u, VertexId v) { return o.query(u, v); }, o.certificate, g, pairs,
        kind_name(o.kind));
    audit_size(o, report);
    return report;
}

}  // namespace ado
