#include "ado/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace ado {

Graph Graph::from_edges(VertexId n, std::vector<RawEdge> edges, std::vector<std::uint64_t> labels) {
    for (auto& e : edges) {
        if (e.u >= n || e.v >= n)
            throw std::invalid_argument("graph: edge endpoint " +
                                        std::to_string(std::max(e.u, e.v)) + " out of range");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const RawEdge& a, const RawEdge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.w < b.w;
    });

    Graph g;
    g.n_ = n;
    std::vector<RawEdge> unique;
    unique.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.u == e.v) continue;  // self-loops never affect distances
        if (!unique.empty() && unique.back().u == e.u && unique.back().v == e.v) continue;
        unique.push_back(e);
        g.max_weight_ = std::max(g.max_weight_, e.w);
    }
    if (g.max_weight_ > 0 && static_cast<std::uint64_t>(n) > kWeightCap / g.max_weight_)
        throw std::invalid_argument("graph: n * max_weight exceeds the distance accumulator cap");

    g.m_ = unique.size();
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : unique) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.targets_.resize(2 * g.m_);
    g.weights_.resize(2 * g.m_);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& e : unique) {
        g.targets_[cursor[e.u]] = e.v;
        g.weights_[cursor[e.u]++] = e.w;
        g.targets_[cursor[e.v]] = e.u;
        g.weights_[cursor[e.v]++] = e.w;
    }
    // adjacency sorted by neighbor id within each vertex
    for (VertexId v = 0; v < n; ++v) {
        auto lo = g.offsets_[v], hi = g.offsets_[v + 1];
        std::vector<std::pair<VertexId, Weight>> tmp;
        tmp.reserve(hi - lo);
        for (auto e = lo; e < hi; ++e) tmp.emplace_back(g.targets_[e], g.weights_[e]);
        std::sort(tmp.begin(), tmp.end());
        for (auto e = lo; e < hi; ++e) {
            g.targets_[e] = tmp[e - lo].first;
            g.weights_[e] = tmp[e - lo].second;
        }
    }

    if (labels.empty()) {
        labels.resize(n);
        for (VertexId v = 0; v < n; ++v) labels[v] = v;
    } else if (labels.size() != n) {
        throw std::invalid_argument("graph: label table size mismatch");
    }
    g.labels_ = std::move(labels);
    return g;
}

std::vector<RawEdge> Graph::edges() const {
    std::vector<RawEdge> out;
    out.reserve(m_);
    for (VertexId u = 0; u < n_; ++u)
        for (auto e = first_edge(u); e < end_edge(u); ++e)
            if (u < targets_[e]) out.push_back({u, targets_[e], weights_[e]});
    return out;
}

Dist Graph::edge_weight(VertexId u, VertexId v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto lo = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
    auto hi = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]);
    auto it = std::lower_bound(lo, hi, v);
    if (it == hi || *it != v) return kInfDist;
    return weights_[static_cast<std::size_t>(it - targets_.begin())];
}

GraphFormat parse_format(const std::string& name) {
    if (name == "dimacs-gr" || name == "dimacs" || name == "gr") return GraphFormat::kDimacs;
    if (name == "edge-list" || name == "edgelist" || name == "el") return GraphFormat::kEdgeList;
    throw std::invalid_argument("unknown graph format '" + name + "'");
}

namespace {

constexpr VertexId kMaxVertices = 1u << 30;

std::int64_t parse_int(const std::string& tok, std::uint64_t line, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(std::string("cannot parse ") + what + " '" + tok + "'", line);
    return value;
}

Weight parse_weight(const std::string& tok, std::uint64_t line) {
    std::int64_t value = parse_int(tok, line, "weight");
    if (value < 0) throw ParseError("negative weight " + tok, line);
    return static_cast<Weight>(value);
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::uint64_t> raw_u, raw_v;
    std::vector<Weight> raw_w;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string a, b, c;
        if (!(ls >> a)) continue;  // blank or comment-only line
        if (!(ls >> b >> c)) throw ParseError("expected 'u v w'", line_no);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
        std::int64_t u = parse_int(a, line_no, "vertex id");
        std::int64_t v = parse_int(b, line_no, "vertex id");
        if (u < 0 || v < 0) throw ParseError("negative vertex id", line_no);
        raw_u.push_back(static_cast<std::uint64_t>(u));
        raw_v.push_back(static_cast<std::uint64_t>(v));
        raw_w.push_back(parse_weight(c, line_no));
    }

    std::vector<std::uint64_t> labels(raw_u);
    labels.insert(labels.end(), raw_v.begin(), raw_v.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.size() > kMaxVertices) throw ParseError("vertex count overflow", 0);

    std::unordered_map<std::uint64_t, VertexId> dense;
    dense.reserve(labels.size());
    for (VertexId i = 0; i < labels.size(); ++i) dense[labels[i]] = i;

    std::vector<RawEdge> edges(raw_u.size());
    for (std::size_t i = 0; i < raw_u.size(); ++i)
        edges[i] = {dense[raw_u[i]], dense[raw_v[i]], raw_w[i]};
    auto vertex_count = static_cast<VertexId>(labels.size());
    return Graph::from_edges(vertex_count, std::move(edges), std::move(labels));
}

Graph read_dimacs(std::istream& in) {
    std::string line;
    std::uint64_t line_no = 0;
    std::int64_t n = -1, declared_m = -1;
    std::vector<RawEdge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind, ns, ms;
            if (!(ls >> kind >> ns >> ms) || kind != "sp")
                throw ParseError("expected 'p sp n m'", line_no);
            n = parse_int(ns, line_no, "vertex count");
            declared_m = parse_int(ms, line_no, "edge count");
            if (n < 0 || declared_m < 0) throw ParseError("negative size in header", line_no);
            if (n > kMaxVertices) throw ParseError("vertex count overflow", line_no);
            edges.reserve(static_cast<std::size_t>(declared_m));
            continue;
        }
        if (tag == "a") {
            if (n < 0) throw ParseError("arc before 'p sp' header", line_no);
            std::string us, vs, ws;
            if (!(ls >> us >> vs >> ws)) throw ParseError("expected 'a u v w'", line_no);
            std::int64_t u = parse_int(us, line_no, "vertex id");
            std::int64_t v = parse_int(vs, line_no, "vertex id");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex id out of range [1, n]", line_no);
            edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1),
                             parse_weight(ws, line_no)});
            continue;
        }
        throw ParseError("unknown record '" + tag + "'", line_no);
    }
    if (n < 0) throw ParseError("missing 'p sp' header", line_no);
    std::vector<std::uint64_t> labels(static_cast<std::size_t>(n));
    for (std::int64_t v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] =
        static_cast<std::uint64_t>(v + 1);
    return Graph::from_edges(static_cast<VertexId>(n), std::move(edges), std::move(labels));
}

}  // namespace

Graph read_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::kDimacs ? read_dimacs(in) : read_edge_list(in);
}

Graph load_graph(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_graph(in, format);
}

void write_graph(const Graph& g, std::ostream& out, GraphFormat format) {
    if (format == GraphFormat::kDimacs) {
        out << "p sp " << g.n() << ' ' << g.m() << '\n';
        for (const auto& e : g.edges())
            out << "a " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
    } else {
        for (const auto& e : g.edges())
            out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << e.w << '\n';
    }
}

void write_graph(const Graph& g, const std::string& path, GraphFormat format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_graph(g, out, format);
}

namespace {

struct UnionFind {
    std::vector<VertexId> parent;
    explicit UnionFind(VertexId n) : parent(n) {
        for (VertexId v = 0; v < n; ++v) parent[v] = v;
    }
    VertexId find(VertexId v) {
        while (parent[v] != v) { parent[v] = parent[parent[v]]; v = parent[v]; }
        return v;
    }
    void unite(VertexId a, VertexId b) {
        a = find(a); b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);  // smaller id survives as representative
        parent[b] = a;
    }
};

}  // namespace

ContractionResult contract_zero_edges(const Graph& g) {
    UnionFind uf(g.n());
    bool any_zero = false;
    for (VertexId u = 0; u < g.n(); ++u)
        for (auto e = g.first_edge(u); e < g.end_edge(u); ++e)
            if (g.weight(e) == 0) { uf.unite(u, g.target(e)); any_zero = true; }

    ContractionResult result;
    result.vertex_map.resize(g.n());
    if (!any_zero) {
        result.graph = g;
        for (VertexId v = 0; v < g.n(); ++v) result.vertex_map[v] = v;
        return result;
    }
    result.changed = true;

    // representatives get dense ids in increasing order of old id
    std::vector<VertexId> new_id(g.n(), kNoVertex);
    std::vector<std::uint64_t> labels;
    VertexId next = 0;
    for (VertexId v = 0; v < g.n(); ++v)
        if (uf.find(v) == v) { new_id[v] = next++; labels.push_back(g.label(v)); }
    for (VertexId v = 0; v < g.n(); ++v) result.vertex_map[v] = new_id[uf.find(v)];

    std::vector<RawEdge> edges;
    for (const auto& e : g.edges()) {
        if (e.w == 0) continue;
        VertexId a = result.vertex_map[e.u], b = result.vertex_map[e.v];
        if (a == b) continue;  // became a self-loop
        edges.push_back({a, b, e.w});
    }
    result.graph = Graph::from_edges(next, std::move(edges), std::move(labels));
    return result;
}

namespace {

std::vector<VertexId> component_of(const Graph& g) {
    std::vector<VertexId> comp(g.n(), kNoVertex);
    std::vector<VertexId> stack;
    VertexId label = 0;
    for (VertexId s = 0; s < g.n(); ++s) {
        if (comp[s] != kNoVertex) continue;
        comp[s] = label;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (auto e = g.first_edge(u); e < g.end_edge(u); ++e) {
                VertexId v = g.target(e);
                if (comp[v] == kNoVertex) { comp[v] = label; stack.push_back(v); }
            }
        }
        ++label;
    }
    return comp;
}

}  // namespace

ValidationReport validate_graph(const Graph& g) {
    ValidationReport report;
    report.n = g.n();
    report.m = g.m();

    auto comp = component_of(g);
    report.connected = g.n() == 0 || *std::max_element(comp.begin(), comp.end()) == 0;

    report.symmetric = true;
    report.positive_weights = true;
    for (VertexId u = 0; u < g.n() && report.symmetric; ++u) {
        for (auto e = g.first_edge(u); e < g.end_edge(u); ++e) {
            if (g.weight(e) == 0) report.positive_weights = false;
            if (g.edge_weight(g.target(e), u) != g.weight(e)) { report.symmetric = false; break; }
        }
    }
    return report;
}

void require_valid(const Graph& g, const char* who) {
    auto report = validate_graph(g);
    if (!report.connected)
        throw std::invalid_argument(std::string(who) + ": graph must be connected");
    if (!report.positive_weights)
        throw std::invalid_argument(std::string(who) +
                                    ": graph has zero-weight edges; contract them first");
}

ComponentExtract largest_component(const Graph& g) {
    auto comp = component_of(g);
    VertexId comps = g.n() == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::uint64_t> size(comps, 0);
    for (VertexId v = 0; v < g.n(); ++v) ++size[comp[v]];
    VertexId best = 0;
    for (VertexId c = 1; c < comps; ++c)
        if (size[c] > size[best]) best = c;

    ComponentExtract out;
    out.vertex_map.assign(g.n(), kNoVertex);
    std::vector<std::uint64_t> labels;
    VertexId next = 0;
    for (VertexId v = 0; v < g.n(); ++v)
        if (comp[v] == best) { out.vertex_map[v] = next++; labels.push_back(g.label(v)); }

    std::vector<RawEdge> edges;
    for (const auto& e : g.edges())
        if (comp[e.u] == best && comp[e.v] == best)
            edges.push_back({out.vertex_map[e.u], out.vertex_map[e.v], e.w});
    out.graph = Graph::from_edges(next, std::move(edges), std::move(labels));
    return out;
}

}  // namespace ado
