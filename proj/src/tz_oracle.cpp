#include "ado/tz_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "ado/rng.hpp"
#include "ado/sssp.hpp"

namespace ado {

Dist TZOracle::bunch_lookup(VertexId v, VertexId w) const {
    const auto& b = bunches[slot[v]];
    auto it = std::lower_bound(b.begin(), b.end(), w,
                               [](const BunchEntry& e, VertexId x) { return e.w < x; });
    if (it == b.end() || it->w != w) return kInfDist;
    return it->d;
}

Dist TZOracle::query(VertexId u, VertexId v) const {
    if (u >= n || v >= n) throw std::invalid_argument("tz_query: vertex out of range");
    if (!stores(u) || !stores(v))
        throw std::invalid_argument("tz_query: endpoint outside the restriction set");
    if (u == v) return 0;
    if (u > v) std::swap(u, v);

    VertexId w = u;
    Dist du = 0;
    for (std::uint32_t i = 0;;) {
        Dist dv = bunch_lookup(v, w);
        if (dv != kInfDist) return du + dv;
        if (++i >= kappa) break;
        std::swap(u, v);
        du = pivot_distance(i, u);
        w = pivot(i, u);
        if (w == kNoVertex) break;  // u's component holds no level-i vertex
    }
    if (base_connected)
        throw std::logic_error("tz_query: alternation exhausted all levels on a connected graph");
    return kInfDist;
}

std::uint64_t TZOracle::bunch_entries() const {
    std::uint64_t total = 0;
    for (const auto& b : bunches) total += b.size();
    return total;
}

std::uint64_t TZOracle::stored_entries() const {
    return bunch_entries() + static_cast<std::uint64_t>(stored.size()) * kappa;
}

namespace {

// A_1..A_{kappa-1} by repeated subsampling with probability n^(-1/kappa).
std::vector<std::vector<VertexId>> draw_levels(VertexId n, std::uint32_t kappa,
                                               std::uint64_t round_seed) {
    const std::uint64_t threshold =
        bernoulli_threshold(std::pow(static_cast<long double>(n),
                                     -1.0L / static_cast<long double>(kappa)));
    std::mt19937_64 engine(round_seed);
    std::vector<std::vector<VertexId>> levels(kappa);
    levels[0].resize(n);
    for (VertexId v = 0; v < n; ++v) levels[0][v] = v;
    for (std::uint32_t i = 1; i < kappa; ++i)
        for (VertexId v : levels[i - 1])
            if (bernoulli_draw(engine, threshold)) levels[i].push_back(v);
    return levels;
}

std::vector<std::vector<VertexId>> check_injected(VertexId n, std::uint32_t kappa,
                                                  std::vector<std::vector<VertexId>> injected) {
    if (injected.size() != kappa - 1)
        throw std::invalid_argument("build_tz: injected levels must cover A_1..A_{kappa-1}");
    std::vector<std::vector<VertexId>> levels(kappa);
    levels[0].resize(n);
    for (VertexId v = 0; v < n; ++v) levels[0][v] = v;
    for (std::uint32_t i = 1; i < kappa; ++i) {
        auto& a = injected[i - 1];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        for (VertexId v : a)
            if (v >= n) throw std::invalid_argument("build_tz: injected level vertex out of range");
        if (!std::includes(levels[i - 1].begin(), levels[i - 1].end(), a.begin(), a.end()))
            throw std::invalid_argument("build_tz: injected levels are not nested");
        levels[i] = std::move(a);
    }
    if (levels.back().empty())
        throw std::invalid_argument("build_tz: injected top level is empty");
    return levels;
}

}  // namespace

TZOracle build_tz(const Graph& g, std::uint32_t kappa, std::uint64_t seed,
                  const TZOptions& opts) {
    if (kappa < 1) throw std::invalid_argument("build_tz: kappa must be >= 1");
    if (kappa > 65534) throw std::invalid_argument("build_tz: kappa too large");
    if (g.n() == 0) throw std::invalid_argument("build_tz: empty graph");
    auto report = validate_graph(g);
    if (!report.positive_weights)
        throw std::invalid_argument("build_tz: graph has zero-weight edges; contract them first");
    if (opts.base_connected && !report.connected)
        throw std::invalid_argument("build_tz: graph must be connected");

    TZOracle o;
    o.n = g.n();
    o.requested_kappa = kappa;
    o.base_connected = opts.base_connected;

    if (!opts.injected_levels.empty() || kappa == 1) {
        o.kappa = kappa;
        o.levels = kappa == 1 ? draw_levels(g.n(), 1, 0)
                              : check_injected(g.n(), kappa, opts.injected_levels);
    } else {
        // resample until the top level is inhabited; after 100 rounds drop
        // a level and try again (strictly smaller stretch bound, never worse)
        for (std::uint32_t effective = kappa;; --effective) {
            if (effective == 1) {
                o.kappa = 1;
                o.levels = draw_levels(g.n(), 1, 0);
                break;
            }
            bool found = false;
            for (std::uint32_t round = 0; round < 100 && !found; ++round) {
                std::uint64_t key = static_cast<std::uint64_t>(kappa - effective) * 1000 + round;
                auto levels = draw_levels(g.n(), effective,
                                          derive_seed(seed, SeedStream::kTzLevels, key));
                if (!levels.back().empty()) {
                    o.kappa = effective;
                    o.levels = std::move(levels);
                    found = true;
                }
            }
            if (found) break;
        }
    }

    o.top_level.assign(g.n(), 0);
    for (std::uint32_t i = 1; i < o.kappa; ++i)
        for (VertexId v : o.levels[i]) o.top_level[v] = static_cast<std::uint16_t>(i);

    o.restricted = !opts.restriction.empty();
    o.stored = opts.restriction;
    if (o.restricted) {
        std::sort(o.stored.begin(), o.stored.end());
        o.stored.erase(std::unique(o.stored.begin(), o.stored.end()), o.stored.end());
        for (VertexId v : o.stored)
            if (v >= g.n()) throw std::invalid_argument("build_tz: restriction vertex out of range");
    } else {
        o.stored.resize(g.n());
        for (VertexId v = 0; v < g.n(); ++v) o.stored[v] = v;
    }
    o.slot.assign(g.n(), kNoVertex);
    for (VertexId s = 0; s < o.stored.size(); ++s) o.slot[o.stored[s]] = s;

    // d(A_i, .) and smallest-id pivots for every level at once
    std::vector<std::vector<Dist>> level_dist(o.kappa);
    std::vector<std::vector<VertexId>> level_near(o.kappa);
    for (std::uint32_t i = 0; i < o.kappa; ++i) {
        auto ms = nearest_multi(g, o.levels[i]);
        level_dist[i] = std::move(ms.dist);
        level_near[i] = std::move(ms.nearest);
    }

    const std::size_t slots = o.stored.size();
    o.pivot_vertex.assign(slots * o.kappa, kNoVertex);
    o.pivot_dist.assign(slots * o.kappa, kInfDist);
    for (std::size_t s = 0; s < slots; ++s) {
        VertexId v = o.stored[s];
        for (std::uint32_t i = 0; i < o.kappa; ++i) {
            o.pivot_vertex[s * o.kappa + i] = level_near[i][v];
            o.pivot_dist[s * o.kappa + i] = level_dist[i][v];
        }
    }

    // Bunches via cluster growing: for w at exact level i, the cluster
    // {v : d(w,v) < d(A_{i+1},v)} is grown by a Dijkstra that only relaxes
    // into a vertex while the tentative distance beats its next-level
    // distance (prefixes of qualifying paths qualify themselves).
    o.bunches.assign(slots, {});
    std::vector<Dist> dist(g.n(), kInfDist);
    std::vector<VertexId> touched;
    using Entry = std::pair<Dist, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (std::uint32_t i = 0; i < o.kappa; ++i) {
        const std::vector<Dist>* bound = i + 1 < o.kappa ? &level_dist[i + 1] : nullptr;
        for (VertexId w : o.levels[i]) {
            if (o.top_level[w] != i) continue;  // handled at its exact level
            dist[w] = 0;
            touched.push_back(w);
            heap.push({0, w});
            while (!heap.empty()) {
                auto [d, u] = heap.top();
                heap.pop();
                if (d != dist[u]) continue;
                for (auto e = g.first_edge(u); e < g.end_edge(u); ++e) {
                    VertexId x = g.target(e);
                    Dist nd = d + g.weight(e);
                    if (nd >= dist[x]) continue;
                    if (bound && nd >= (*bound)[x]) continue;
                    if (dist[x] == kInfDist) touched.push_back(x);
                    dist[x] = nd;
                    heap.push({nd, x});
                }
            }
            for (VertexId v : touched) {
                if (o.slot[v] != kNoVertex)
                    o.bunches[o.slot[v]].push_back({w, dist[v]});
                dist[v] = kInfDist;
            }
            touched.clear();
        }
    }
    for (auto& b : o.bunches)
        std::sort(b.begin(), b.end(),
                  [](const BunchEntry& a, const BunchEntry& c) { return a.w < c.w; });
    return o;
}

}  // namespace ado
