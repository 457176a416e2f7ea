#include "ado/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "ado/rng.hpp"

namespace ado {

namespace {

// std::uniform_int_distribution is implementation-defined; plain modulo
// keeps generated fixtures stable across standard libraries.
Weight draw_weight(std::mt19937_64& eng, Weight wmin, Weight wmax) {
    if (wmin > wmax) throw std::invalid_argument("generator: wmin > wmax");
    return wmin + eng() % (wmax - wmin + 1);
}

std::vector<RawEdge> random_tree(VertexId n, std::mt19937_64& eng, Weight wmin, Weight wmax) {
    std::vector<RawEdge> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (VertexId v = 1; v < n; ++v) {
        auto parent = static_cast<VertexId>(eng() % v);
        edges.push_back({parent, v, draw_weight(eng, wmin, wmax)});
    }
    return edges;
}

}  // namespace

Graph gen_gnm(VertexId n, std::uint64_t m, Weight wmin, Weight wmax, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("gen_gnm: n must be positive");
    std::mt19937_64 eng(derive_seed(seed, SeedStream::kGenerator));
    auto edges = random_tree(n, eng, wmin, wmax);
    const std::uint64_t complete = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::uint64_t target = std::min(m, complete);
    std::uint64_t attempts = 0;
    // Extra edges may collide with existing ones (collapsed at ingestion),
    // so aim via attempts rather than exact final count.
    while (edges.size() < target && attempts < 20 * target + 100) {
        ++attempts;
        auto u = static_cast<VertexId>(eng() % n);
        auto v = static_cast<VertexId>(eng() % n);
        if (u == v) continue;
        edges.push_back({u, v, draw_weight(eng, wmin, wmax)});
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_grid(VertexId rows, VertexId cols, Weight wmin, Weight wmax, std::uint64_t seed) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("gen_grid: empty grid");
    std::mt19937_64 eng(derive_seed(seed, SeedStream::kGenerator));
    std::vector<RawEdge> edges;
    auto id = [cols](VertexId r, VertexId c) { return r * cols + c; };
    for (VertexId r = 0; r < rows; ++r)
        for (VertexId c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), draw_weight(eng, wmin, wmax)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), draw_weight(eng, wmin, wmax)});
        }
    return Graph::from_edges(rows * cols, std::move(edges));
}

Graph gen_tree_chords(VertexId n, std::uint64_t chords, Weight wmin, Weight wmax,
                      std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("gen_tree_chords: n must be positive");
    std::mt19937_64 eng(derive_seed(seed, SeedStream::kGenerator));
    auto edges = random_tree(n, eng, wmin, wmax);
    for (std::uint64_t c = 0; c < chords; ++c) {
        auto u = static_cast<VertexId>(eng() % n);
        auto v = static_cast<VertexId>(eng() % n);
        if (u == v) continue;
        edges.push_back({u, v, draw_weight(eng, wmin, wmax)});
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_preferential(VertexId n, std::uint32_t degree, Weight wmin, Weight wmax,
                       std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("gen_preferential: n must be positive");
    if (degree == 0) degree = 1;
    std::mt19937_64 eng(derive_seed(seed, SeedStream::kGenerator));
    std::vector<RawEdge> edges;
    std::vector<VertexId> pool;  // endpoint multiset; sampling it is degree-proportional
    pool.push_back(0);
    for (VertexId v = 1; v < n; ++v) {
        std::uint32_t attach = std::min<std::uint32_t>(degree, v);
        for (std::uint32_t a = 0; a < attach; ++a) {
            VertexId u = pool[eng() % pool.size()];
            if (u == v) continue;
            edges.push_back({u, v, draw_weight(eng, wmin, wmax)});
            pool.push_back(u);
        }
        pool.push_back(v);
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_path(VertexId n, Weight w) {
    std::vector<RawEdge> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, w});
    return Graph::from_edges(n, std::move(edges));
}

Graph generate_family(const std::string& family, VertexId n, std::uint64_t aux, Weight wmin,
                      Weight wmax, std::uint64_t seed) {
    if (family == "gnm") return gen_gnm(n, aux != 0 ? aux : 4ull * n, wmin, wmax, seed);
    if (family == "grid") {
        auto side = static_cast<VertexId>(std::sqrt(static_cast<double>(n)));
        if (side < 2) side = 2;
        return gen_grid(side, side, wmin, wmax, seed);
    }
    if (family == "tree-chords")
        return gen_tree_chords(n, aux != 0 ? aux : n / 4, wmin, wmax, seed);
    if (family == "preferential")
        return gen_preferential(n, aux != 0 ? static_cast<std::uint32_t>(aux) : 3, wmin, wmax,
                                seed);
    if (family == "path") return gen_path(n, wmax != 0 ? wmax : 1);
    throw std::invalid_argument("unknown graph family '" + family + "'");
}

}  // namespace ado
