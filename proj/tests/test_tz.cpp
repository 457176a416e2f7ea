#include <doctest.h>

#include <map>

#include "ado/exact.hpp"
#include "ado/generators.hpp"
#include "ado/tz_oracle.hpp"

using namespace ado;

namespace {

Graph path3() { return Graph::from_edges(3, {{0, 1, 1}, {1, 2, 1}}); }

std::map<VertexId, Dist> bunch_map(const TZOracle& o, VertexId v) {
    std::map<VertexId, Dist> out;
    for (const auto& entry : o.bunch(v)) out[entry.w] = entry.d;
    return out;
}

}  // namespace

TEST_CASE("two-level oracle on the unit path with an injected middle level") {
    TZOptions opts;
    opts.injected_levels = {{1}};
    TZOracle o = build_tz(path3(), 2, 1, opts);

    CHECK(o.kappa == 2);
    CHECK(o.levels[0] == std::vector<VertexId>{0, 1, 2});
    CHECK(o.levels[1] == std::vector<VertexId>{1});

    // pivots at level 1: everyone's nearest level-1 vertex is 1
    CHECK(o.pivot(1, 0) == 1);
    CHECK(o.pivot_distance(1, 0) == 1);
    CHECK(o.pivot_distance(1, 1) == 0);
    CHECK(o.pivot_distance(1, 2) == 1);

    // bunches: level-0 members closer than the level-1 pivot, plus all of A_1
    CHECK(bunch_map(o, 0) == std::map<VertexId, Dist>{{0, 0}, {1, 1}});
    CHECK(bunch_map(o, 1) == std::map<VertexId, Dist>{{1, 0}});
    CHECK(bunch_map(o, 2) == std::map<VertexId, Dist>{{1, 1}, {2, 0}});

    // the endpoints meet through the middle pivot: 1 + 1
    CHECK(o.query(0, 2) == 2);
    CHECK(o.query(2, 0) == 2);
    CHECK(o.query(0, 1) == 1);
    CHECK(o.query(1, 1) == 0);
}

TEST_CASE("single-level oracle answers exactly") {
    Graph g = gen_gnm(40, 140, 1, 80, 4);
    TZOracle o = build_tz(g, 1, 9);
    auto exact = exact_oracle(g);
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v = u; v < g.n(); ++v) CHECK(o.query(u, v) == exact.at(u, v));
    // kappa=1 stores the full distance table
    CHECK(o.bunch_entries() == 40ull * 40);
}

TEST_CASE("stretch bound respected for deeper oracles") {
    for (std::uint64_t seed : {21ull, 22ull}) {
        Graph g = gen_gnm(48, 200, 1, 100, seed);
        auto exact = exact_oracle(g);
        for (std::uint32_t kappa : {2u, 3u, 4u}) {
            TZOracle o = build_tz(g, kappa, seed + 7);
            for (VertexId u = 0; u < g.n(); ++u)
                for (VertexId v = u + 1; v < g.n(); ++v) {
                    Dist est = o.query(u, v);
                    CHECK(est >= exact.at(u, v));
                    CHECK(est <= (2ull * kappa - 1) * exact.at(u, v));
                }
        }
    }
}

TEST_CASE("query is symmetric and zero on the diagonal") {
    Graph g = gen_tree_chords(30, 10, 1, 40, 2);
    TZOracle o = build_tz(g, 3, 5);
    for (VertexId u = 0; u < g.n(); ++u) {
        CHECK(o.query(u, u) == 0);
        for (VertexId v = 0; v < g.n(); ++v) CHECK(o.query(u, v) == o.query(v, u));
    }
    CHECK_THROWS_AS(o.query(0, 30), std::invalid_argument);
}

TEST_CASE("disconnected bases report infinite distance across components") {
    Graph g = Graph::from_edges(4, {{0, 1, 2}, {2, 3, 3}});
    TZOptions opts;
    opts.base_connected = false;
    TZOracle o = build_tz(g, 2, 6, opts);
    CHECK(o.query(0, 1) == 2);
    CHECK(o.query(2, 3) == 3);
    CHECK(o.query(0, 2) == kInfDist);
    CHECK(o.query(1, 3) == kInfDist);

    // the same graph is rejected when connectivity is required
    CHECK_THROWS_AS(build_tz(g, 2, 6), std::invalid_argument);
}

TEST_CASE("injected levels are validated") {
    TZOptions bad_count;
    bad_count.injected_levels = {{1}, {1}};
    CHECK_THROWS_AS(build_tz(path3(), 2, 1, bad_count), std::invalid_argument);

    TZOptions empty_top;
    empty_top.injected_levels = {{}};
    CHECK_THROWS_AS(build_tz(path3(), 2, 1, empty_top), std::invalid_argument);

    TZOptions not_nested;
    not_nested.injected_levels = {{0, 1}, {2}};
    CHECK_THROWS_AS(build_tz(path3(), 3, 1, not_nested), std::invalid_argument);

    TZOptions out_of_range;
    out_of_range.injected_levels = {{7}};
    CHECK_THROWS_AS(build_tz(path3(), 2, 1, out_of_range), std::invalid_argument);
}

TEST_CASE("restricted oracles only answer inside the restriction") {
    Graph g = gen_gnm(32, 120, 1, 30, 3);
    TZOptions opts;
    opts.restriction = {3, 9, 20, 31};
    TZOracle o = build_tz(g, 2, 11, opts);
    CHECK(o.restricted);
    CHECK(o.stores(9));
    CHECK_FALSE(o.stores(4));

    auto exact = exact_oracle(g);
    for (VertexId u : opts.restriction)
        for (VertexId v : opts.restriction) {
            Dist est = o.query(u, v);
            CHECK(est >= exact.at(u, v));
            CHECK(est <= 3 * exact.at(u, v));
        }
    CHECK_THROWS_AS(o.query(3, 4), std::invalid_argument);
}

TEST_CASE("level sampling is deterministic and respects nesting") {
    Graph g = gen_gnm(100, 300, 1, 50, 8);
    TZOracle a = build_tz(g, 3, 77);
    TZOracle b = build_tz(g, 3, 77);
    CHECK(a.levels == b.levels);
    CHECK(a.kappa <= a.requested_kappa);
    for (std::uint32_t i = 1; i < a.kappa; ++i) {
        CHECK(!a.levels[i].empty());
        CHECK(std::includes(a.levels[i - 1].begin(), a.levels[i - 1].end(),
                            a.levels[i].begin(), a.levels[i].end()));
    }
}

TEST_CASE("build rejects bad inputs") {
    CHECK_THROWS_AS(build_tz(Graph::from_edges(0, {}), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_tz(path3(), 0, 1), std::invalid_argument);
    Graph zero = Graph::from_edges(2, {{0, 1, 0}});
    CHECK_THROWS_AS(build_tz(zero, 1, 1), std::invalid_argument);
}
