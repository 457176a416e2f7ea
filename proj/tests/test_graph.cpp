#include <doctest.h>

#include <sstream>

#include "ado/graph.hpp"

using namespace ado;

TEST_CASE("from_edges builds a sorted symmetric adjacency") {
    Graph g = Graph::from_edges(4, {{2, 0, 7}, {0, 1, 3}, {1, 2, 5}});
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 0);
    CHECK(g.edge_weight(0, 2) == 7);
    CHECK(g.edge_weight(2, 0) == 7);
    CHECK(g.edge_weight(0, 3) == kInfDist);
    CHECK(g.max_weight() == 7);
    // adjacency of 0 sorted by neighbor id
    CHECK(g.target(g.first_edge(0)) == 1);
    CHECK(g.target(g.first_edge(0) + 1) == 2);
}

TEST_CASE("from_edges drops self-loops and keeps the lightest parallel edge") {
    Graph g = Graph::from_edges(3, {{0, 1, 9}, {1, 0, 4}, {2, 2, 1}, {1, 2, 6}});
    CHECK(g.m() == 2);
    CHECK(g.edge_weight(0, 1) == 4);
    CHECK(g.edge_weight(2, 2) == kInfDist);
}

TEST_CASE("from_edges rejects out-of-range endpoints and oversized weights") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(8, {{0, 1, kWeightCap}}), std::invalid_argument);
}

TEST_CASE("edge-list reader remaps sparse labels densely") {
    std::istringstream in("# comment line\n30 10 5\n10 20 2  # trailing comment\n");
    Graph g = read_graph(in, GraphFormat::kEdgeList);
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    // labels sorted: 10 -> 0, 20 -> 1, 30 -> 2
    CHECK(g.label(0) == 10);
    CHECK(g.label(1) == 20);
    CHECK(g.label(2) == 30);
    CHECK(g.edge_weight(0, 2) == 5);
    CHECK(g.edge_weight(0, 1) == 2);
}

TEST_CASE("edge-list reader rejects malformed lines") {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return read_graph(in, GraphFormat::kEdgeList);
    };
    CHECK_THROWS_AS(parse("0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("0 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse("0 -1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("0 1 -2\n"), ParseError);
    CHECK_THROWS_AS(parse("a b c\n"), ParseError);
    try {
        parse("0 1 1\n0 1\n");
    } catch (const ParseError& e) {
        CHECK(e.line_number == 2);
    }
}

TEST_CASE("dimacs reader handles 1-based ids and comments") {
    std::istringstream in("c tiny graph\np sp 3 2\na 1 2 4\na 2 3 6\n");
    Graph g = read_graph(in, GraphFormat::kDimacs);
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.edge_weight(0, 1) == 4);
    CHECK(g.edge_weight(1, 2) == 6);
    CHECK(g.label(0) == 1);
    CHECK(g.label(2) == 3);
}

TEST_CASE("dimacs reader rejects bad records") {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return read_graph(in, GraphFormat::kDimacs);
    };
    CHECK_THROWS_AS(parse("a 1 2 3\n"), ParseError);          // arc before header
    CHECK_THROWS_AS(parse("p sp 2 1\na 1 3 4\n"), ParseError); // id out of range
    CHECK_THROWS_AS(parse("p sp 2 1\nx 1 2 3\n"), ParseError); // unknown record
    CHECK_THROWS_AS(parse("q sp 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);                    // missing header
}

TEST_CASE("write/read round-trips preserve structure in both formats") {
    Graph g = Graph::from_edges(5, {{0, 1, 3}, {1, 2, 8}, {2, 3, 1}, {3, 4, 2}, {0, 4, 9}});
    for (GraphFormat fmt : {GraphFormat::kEdgeList, GraphFormat::kDimacs}) {
        std::ostringstream out;
        write_graph(g, out, fmt);
        std::istringstream in(out.str());
        Graph back = read_graph(in, fmt);
        CHECK(back.same_structure(g));
    }
}

TEST_CASE("parse_format accepts the documented aliases") {
    CHECK(parse_format("dimacs-gr") == GraphFormat::kDimacs);
    CHECK(parse_format("edge-list") == GraphFormat::kEdgeList);
    CHECK_THROWS_AS(parse_format("csv"), std::invalid_argument);
}

TEST_CASE("zero-weight contraction merges a triangle into one vertex") {
    // two zero edges chain all three vertices together; the weighted edge
    // collapses to a self-loop and disappears
    Graph g = Graph::from_edges(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 5}});
    auto result = contract_zero_edges(g);
    CHECK(result.changed);
    CHECK(result.graph.n() == 1);
    CHECK(result.graph.m() == 0);
    CHECK(result.vertex_map == std::vector<VertexId>{0, 0, 0});
}

TEST_CASE("zero-weight contraction keeps surviving parallel weight") {
    // 0=1 (zero) and both endpoints reach 2: lightest surviving edge wins
    Graph g = Graph::from_edges(3, {{0, 1, 0}, {0, 2, 7}, {1, 2, 4}});
    auto result = contract_zero_edges(g);
    CHECK(result.changed);
    CHECK(result.graph.n() == 2);
    CHECK(result.graph.m() == 1);
    CHECK(result.graph.edge_weight(0, 1) == 4);
    CHECK(result.vertex_map == std::vector<VertexId>{0, 0, 1});
    // representative keeps the smaller original label
    CHECK(result.graph.label(0) == 0);
    CHECK(result.graph.label(1) == 2);
}

TEST_CASE("contraction without zero edges is the identity") {
    Graph g = Graph::from_edges(3, {{0, 1, 2}, {1, 2, 3}});
    auto result = contract_zero_edges(g);
    CHECK_FALSE(result.changed);
    CHECK(result.graph.same_structure(g));
    CHECK(result.vertex_map == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("validate_graph reports connectivity and positivity") {
    Graph connected = Graph::from_edges(3, {{0, 1, 1}, {1, 2, 1}});
    auto r1 = validate_graph(connected);
    CHECK(r1.connected);
    CHECK(r1.symmetric);
    CHECK(r1.positive_weights);
    CHECK(r1.ok());

    Graph split = Graph::from_edges(4, {{0, 1, 1}, {2, 3, 1}});
    CHECK_FALSE(validate_graph(split).connected);
    CHECK_THROWS_AS(require_valid(split, "test"), std::invalid_argument);

    Graph zero = Graph::from_edges(2, {{0, 1, 0}});
    CHECK_FALSE(validate_graph(zero).positive_weights);
    CHECK_THROWS_AS(require_valid(zero, "test"), std::invalid_argument);
}

TEST_CASE("largest_component extracts the biggest piece with labels") {
    Graph g = Graph::from_edges(6, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}});
    auto out = largest_component(g);
    CHECK(out.graph.n() == 3);
    CHECK(out.graph.m() == 2);
    CHECK(out.vertex_map[0] == 0);
    CHECK(out.vertex_map[3] == kNoVertex);
    CHECK(out.vertex_map[5] == kNoVertex);
    CHECK(out.graph.label(2) == 2);
}
