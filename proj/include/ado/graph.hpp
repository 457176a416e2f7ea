#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ado/types.hpp"

namespace ado {

struct RawEdge {
    VertexId u = 0;
    VertexId v = 0;
    Weight w = 0;
};

// Immutable weighted undirected graph in compressed adjacency form.
// Every edge appears in both endpoint lists; adjacency is sorted by
// neighbor id. Vertex ids are dense; original input labels live in a
// side table.
class Graph {
public:
    Graph() = default;

    // Collapses parallel edges to the minimum weight and drops self-loops.
    // Rejects graphs whose n * max_weight exceeds the accumulator cap.
    static Graph from_edges(VertexId n, std::vector<RawEdge> edges,
                            std::vector<std::uint64_t> labels = {});

    VertexId n() const { return n_; }
    std::uint64_t m() const { return m_; }

    std::uint64_t first_edge(VertexId v) const { return offsets_[v]; }
    std::uint64_t end_edge(VertexId v) const { return offsets_[v + 1]; }
    VertexId target(std::uint64_t e) const { return targets_[e]; }
    Weight weight(std::uint64_t e) const { return weights_[e]; }
    std::uint64_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    std::uint64_t label(VertexId v) const { return labels_[v]; }
    const std::vector<std::uint64_t>& labels() const { return labels_; }
    Weight max_weight() const { return max_weight_; }

    // Unique undirected edges with u < v, ordered by (u, v).
    std::vector<RawEdge> edges() const;

    // Weight of edge (u, v), or kInfDist when absent. Binary search over
    // the sorted adjacency of the smaller-degree endpoint.
    Dist edge_weight(VertexId u, VertexId v) const;

    bool same_structure(const Graph& other) const {
        return n_ == other.n_ && offsets_ == other.offsets_ && targets_ == other.targets_ &&
               weights_ == other.weights_;
    }

private:
    VertexId n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> offsets_;
    std::vector<VertexId> targets_;
    std::vector<Weight> weights_;
    std::vector<std::uint64_t> labels_;
    Weight max_weight_ = 0;
};

enum class GraphFormat { kDimacs, kEdgeList };

GraphFormat parse_format(const std::string& name);

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::uint64_t line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"), line_number(line) {}
    std::uint64_t line_number;
};

Graph load_graph(const std::string& path, GraphFormat format);
Graph read_graph(std::istream& in, GraphFormat format);
void write_graph(const Graph& g, const std::string& path, GraphFormat format);
void write_graph(const Graph& g, std::ostream& out, GraphFormat format);

struct ContractionResult {
    Graph graph;
    // old vertex id -> surviving vertex id
    std::vector<VertexId> vertex_map;
    bool changed = false;
};

// Merges vertices joined by zero-weight paths; the surviving graph has
// strictly positive weights and preserves all distances exactly.
ContractionResult contract_zero_edges(const Graph& g);

struct ValidationReport {
    VertexId n = 0;
    std::uint64_t m = 0;
    bool connected = false;
    bool symmetric = false;
    bool positive_weights = false;
    bool ok() const { return connected && symmetric && positive_weights; }
};

ValidationReport validate_graph(const Graph& g);

void require_valid(const Graph& g, const char* who);

struct ComponentExtract {
    Graph graph;
    std::vector<VertexId> vertex_map;  // old id -> new id, kNoVertex if dropped
};

ComponentExtract largest_component(const Graph& g);

}  // namespace ado
