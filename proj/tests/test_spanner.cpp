#include <doctest.h>

#include "ado/exact.hpp"
#include "ado/generators.hpp"
#include "ado/spanner.hpp"

using namespace ado;

namespace {

// all-pairs stretch check: d_H <= bound * d_G, and H never shortens anything
void check_spanner(const Graph& g, const SpannerSubgraph& h) {
    REQUIRE(h.graph.n() == g.n());
    for (const auto& e : h.graph.edges()) CHECK(g.edge_weight(e.u, e.v) == e.w);

    auto dg = exact_oracle(g);
    auto dh = exact_oracle(h.graph);
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v = u + 1; v < g.n(); ++v) {
            if (dg.at(u, v) == kInfDist) {
                CHECK(dh.at(u, v) == kInfDist);
                continue;
            }
            REQUIRE(dh.at(u, v) != kInfDist);
            CHECK(dh.at(u, v) >= dg.at(u, v));
            CHECK(dh.at(u, v) <= h.stretch() * dg.at(u, v));
        }
}

}  // namespace

TEST_CASE("k'=1 keeps the whole graph") {
    Graph g = gen_gnm(40, 120, 1, 50, 3);
    auto h = build_spanner(g, 1, 7);
    CHECK(h.graph.same_structure(g));
    CHECK(h.stretch() == 1);
}

TEST_CASE("trees survive any spanner parameter intact") {
    Graph g = gen_tree_chords(64, 0, 1, 99, 15);
    for (std::uint32_t kp : {2u, 3u, 4u}) {
        auto h = build_spanner(g, kp, 5);
        CHECK(h.graph.m() == g.m());
    }
}

TEST_CASE("spanner stretch bound holds all-pairs on random graphs") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
        Graph g = gen_gnm(48, 300, 1, 100, seed);
        for (std::uint32_t kp : {2u, 3u}) check_spanner(g, build_spanner(g, kp, seed + 100));
    }
}

TEST_CASE("spanner stretch bound holds on a grid") {
    Graph g = gen_grid(6, 6, 1, 20, 8);
    check_spanner(g, build_spanner(g, 2, 9));
    check_spanner(g, build_spanner(g, 3, 9));
}

TEST_CASE("spanner prunes dense graphs") {
    // n=64, k'=2: expected size around k' * n^(3/2) = 1024; the dense input
    // has ~1700 edges, the spanner must land well under the 10x budget
    Graph g = gen_gnm(64, 1700, 1, 100, 31);
    auto h = build_spanner(g, 2, 12);
    CHECK(h.graph.m() < g.m());
    CHECK(h.size_constant() < 10.0L);
}

TEST_CASE("spanner build is deterministic in the seed") {
    Graph g = gen_gnm(80, 400, 1, 60, 17);
    auto a = build_spanner(g, 3, 42);
    auto b = build_spanner(g, 3, 42);
    CHECK(a.graph.same_structure(b.graph));
}

TEST_CASE("spanner rejects bad parameters") {
    Graph g = gen_path(4);
    CHECK_THROWS_AS(build_spanner(g, 0, 1), std::invalid_argument);
}
