// Python bindings for the oracle library.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ado/audit.hpp"
#include "ado/composite.hpp"
#include "ado/exact.hpp"
#include "ado/generators.hpp"
#include "ado/graph.hpp"
#include "ado/spanner.hpp"

namespace py = pybind11;

namespace {

ado::Graph graph_from_edges(ado::VertexId n,
                            const std::vector<std::tuple<ado::VertexId, ado::VertexId,
                                                         ado::Weight>>& edges) {
    std::vector<ado::RawEdge> raw;
    raw.reserve(edges.size());
    for (const auto& [u, v, w] : edges) raw.push_back({u, v, w});
    return ado::Graph::from_edges(n, raw);
}

std::vector<std::tuple<ado::VertexId, ado::VertexId, ado::Weight>> graph_edges(
    const ado::Graph& g) {
    std::vector<std::tuple<ado::VertexId, ado::VertexId, ado::Weight>> out;
    for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.w);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "approximate distance oracles (Thorup-Zwick, spanner-based composites)";

    py::class_<ado::Graph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &ado::Graph::n)
        .def_property_readonly("m", &ado::Graph::m)
        .def("edges", &graph_edges)
        .def("edge_weight", &ado::Graph::edge_weight, py::arg("u"), py::arg("v"));

    py::class_<ado::CompositeOracle>(m, "Oracle")
        .def_readonly("kind", &ado::CompositeOracle::kind)
        .def_readonly("n", &ado::CompositeOracle::n)
        .def_readonly("k", &ado::CompositeOracle::k)
        .def_readonly("certificate", &ado::CompositeOracle::certificate)
        .def_readonly("fallback", &ado::CompositeOracle::fallback)
        .def_property_readonly("kind_name",
                               [](const ado::CompositeOracle& o) { return ado::kind_name(o.kind); })
        .def("query", &ado::CompositeOracle::query, py::arg("u"), py::arg("v"))
        .def("stored_entries", &ado::CompositeOracle::stored_entries)
        .def("save", [](const ado::CompositeOracle& o, const std::string& path) {
            ado::save_oracle(o, path);
        });

    py::class_<ado::AuditReport>(m, "AuditReport")
        .def_readonly("oracle", &ado::AuditReport::oracle)
        .def_readonly("bound", &ado::AuditReport::bound)
        .def_readonly("pairs_audited", &ado::AuditReport::pairs_audited)
        .def_readonly("finite_pairs", &ado::AuditReport::finite_pairs)
        .def_readonly("entries", &ado::AuditReport::entries)
        .def_readonly("size_within_budget", &ado::AuditReport::size_within_budget)
        .def_property_readonly("max_stretch",
                               [](const ado::AuditReport& r) {
                                   return static_cast<double>(r.max_stretch);
                               })
        .def_property_readonly("mean_stretch",
                               [](const ado::AuditReport& r) {
                                   return static_cast<double>(r.mean_stretch);
                               })
        .def_property_readonly("violation_count",
                               [](const ado::AuditReport& r) { return r.violations.size(); })
        .def("ok", &ado::AuditReport::ok);

    m.def("load_graph",
          [](const std::string& path, const std::string& format) {
              return ado::load_graph(path, ado::parse_format(format));
          },
          py::arg("path"), py::arg("format") = "edge-list");
    m.def("generate",
          [](const std::string& family, ado::VertexId n, std::uint64_t aux, ado::Weight wmin,
             ado::Weight wmax, std::uint64_t seed) {
              return ado::generate_family(family, n, aux, wmin, wmax, seed);
          },
          py::arg("family"), py::arg("n"), py::arg("aux") = 0, py::arg("wmin") = 1,
          py::arg("wmax") = 100, py::arg("seed") = 1);

    m.def("build_tz", &ado::build_tz_oracle, py::arg("graph"), py::arg("kappa"), py::arg("seed"));
    m.def("build_warmup",
          [](const ado::Graph& g, std::uint32_t k, const std::string& epsilon,
             std::uint64_t seed) {
              return ado::build_warmup(g, k, ado::Rational::parse(epsilon), seed);
          },
          py::arg("graph"), py::arg("k"), py::arg("epsilon"), py::arg("seed"));
    m.def("build_small_k", &ado::build_small_k, py::arg("graph"), py::arg("k"), py::arg("seed"));
    m.def("build_near_linear",
          [](const ado::Graph& g, std::uint32_t k, std::uint64_t seed,
             const std::string& mode) {
              auto parsed = mode == "large-k" ? ado::NearLinearMode::kLargeK
                                              : ado::NearLinearMode::kPaperC;
              return ado::build_near_linear(g, k, seed, parsed);
          },
          py::arg("graph"), py::arg("k"), py::arg("seed"), py::arg("mode") = "paper-c");
    m.def("load_oracle", &ado::load_oracle, py::arg("path"));

    m.def("spanner_edges",
          [](const ado::Graph& g, std::uint32_t k_prime, std::uint64_t seed) {
              auto h = ado::build_spanner(g, k_prime, seed);
              return graph_edges(h.graph);
          },
          py::arg("graph"), py::arg("k_prime"), py::arg("seed"));

    m.def("exact_distances",
          [](const ado::Graph& g, ado::VertexId source) {
              return ado::dijkstra(g, source).dist;
          },
          py::arg("graph"), py::arg("source"));

    m.def("audit",
          [](const ado::CompositeOracle& o, const ado::Graph& g, std::uint64_t sample,
             std::uint64_t seed) {
              ado::PairSample pairs = sample == 0 ? ado::PairSample::all(g.n())
                                                  : ado::PairSample::random(g.n(), sample, seed);
              return ado::audit_oracle(o, g, pairs);
          },
          py::arg("oracle"), py::arg("graph"), py::arg("sample") = 0, py::arg("seed") = 1);

    m.attr("INF_DIST") = ado::kInfDist;
}
