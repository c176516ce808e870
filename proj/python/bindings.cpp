#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rainbow/audit.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/error.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/io.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verify.hpp"
#include "rainbow/witness.hpp"

namespace py = pybind11;
using namespace rainbow;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const Graph& g)
{
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : g.edges()) {
        out.emplace_back(e.u, e.v);
    }
    return out;
}

Graph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) {
        edges.push_back({u, v});
    }
    return Graph::from_pairs(n, std::move(edges));
}

} // namespace

PYBIND11_MODULE(_rainbow, m)
{
    m.doc() = "Rainbow connection numbers: witness graphs, colorings, verification, exact search";

    auto base = py::register_exception<Error>(m, "RainbowError", PyExc_ValueError);
    py::register_exception<InvalidParameter>(m, "InvalidParameter", base.ptr());
    py::register_exception<BindingError>(m, "BindingError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<SizeLimitError>(m, "SizeLimitError", base.ptr());
    py::register_exception<BoundTooSmall>(m, "BoundTooSmall", base.ptr());
    py::register_exception<AuditInconsistency>(m, "AuditInconsistency", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_pairs), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("edges", &edge_pairs)
        .def("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("to_json", [](const Graph& g) { return to_json(g).dump(); })
        .def_static("from_json", [](const std::string& s) { return graph_from_json(json::parse(s)); })
        .def("to_dot", [](const Graph& g) { return to_dot(g); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<EdgeColoring>(m, "EdgeColoring")
        .def(py::init<int, std::vector<int>>(), py::arg("k"), py::arg("colors"))
        .def_property_readonly("k", &EdgeColoring::palette_size)
        .def_property_readonly("colors",
                               [](const EdgeColoring& c) { return std::vector<int>(c.colors().begin(), c.colors().end()); })
        .def(py::self == py::self);

    py::class_<WitnessGraph>(m, "WitnessGraph")
        .def_property_readonly("graph", &WitnessGraph::graph)
        .def_property_readonly("a", [](const WitnessGraph& wg) { return wg.params().a; })
        .def_property_readonly("b", [](const WitnessGraph& wg) { return wg.params().b; })
        .def_property_readonly("cycle_n", &WitnessGraph::cycle_length)
        .def_property_readonly("cycle", &WitnessGraph::cycle_ids)
        .def_property_readonly("w", &WitnessGraph::w_id)
        .def_property_readonly("v", &WitnessGraph::v_id)
        .def_property_readonly("path", &WitnessGraph::path_ids)
        .def("to_json", [](const WitnessGraph& wg) { return to_json(wg).dump(); });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_property_readonly("mode", [](const VerificationReport& r) { return std::string(to_string(r.mode)); })
        .def_readonly("passed", &VerificationReport::passed)
        .def_readonly("violating_pair", &VerificationReport::violating_pair)
        .def_readonly("checked_pairs", &VerificationReport::checked_pairs)
        .def("__bool__", [](const VerificationReport& r) { return r.passed; });

    py::class_<SolveResult>(m, "SolveResult")
        .def_property_readonly("kind", [](const SolveResult& r) { return std::string(to_string(r.kind)); })
        .def_readonly("value", &SolveResult::value)
        .def_readonly("certificate", &SolveResult::certificate)
        .def_readonly("colorings_tested", &SolveResult::colorings_tested)
        .def_readonly("lower_bound_used", &SolveResult::lower_bound_used);

    m.def("build_cycle", &build_cycle, py::arg("n"));
    m.def("build_path", &build_path, py::arg("n"));
    m.def("build_complete", &build_complete, py::arg("n"));
    m.def("build_star", &build_star, py::arg("leaves"));
    m.def("bfs_distances", [](const Graph& g, Vertex s) { return bfs_distances(g, s).dist; }, py::arg("graph"),
          py::arg("source"));
    m.def("diameter", &diameter);

    m.def("build_witness", [](int a, int b) { return build_witness({a, b}); }, py::arg("a"), py::arg("b"));
    m.def("build_small_witness", &build_small_witness, py::arg("t"));

    m.def("rc_coloring", &rc_coloring);
    m.def("src_coloring", &src_coloring);
    m.def("used_colors", &used_colors);

    m.def("is_rainbow_connected", [](const Graph& g, const EdgeColoring& c) { return is_rainbow_connected(g, c); });
    m.def("is_strong_rainbow_connected",
          [](const Graph& g, const EdgeColoring& c) { return is_strong_rainbow_connected(g, c); });
    m.def("exists_rainbow_path", &exists_rainbow_path);
    m.def("exists_rainbow_geodesic", &exists_rainbow_geodesic);

    m.def("canonical_colorings", [](std::size_t m_, int k) {
        std::vector<std::vector<int>> out;
        CanonicalColorings gen(m_, k);
        while (gen.next()) {
            out.emplace_back(gen.current().begin(), gen.current().end());
        }
        return out;
    });
    auto solve = [](SolveKind kind) {
        return [kind](const Graph& g, std::optional<int> k_max, std::size_t max_edges) {
            return solve_exact(g, kind, SolveOptions{k_max, max_edges});
        };
    };
    m.def("rc_exact", solve(SolveKind::rc), py::arg("graph"), py::arg("k_max") = py::none(),
          py::arg("max_edges") = default_max_edges);
    m.def("src_exact", solve(SolveKind::src), py::arg("graph"), py::arg("k_max") = py::none(),
          py::arg("max_edges") = default_max_edges);
    m.def("bounds", [](const Graph& g) {
        const auto b = bounds(g);
        return std::make_pair(b.lower, b.upper);
    });

    m.def("pigeonhole_margins", [](int a, int b) {
        const auto margins = pigeonhole_margins({a, b});
        return std::make_pair(margins.ceil_a, margins.ceil_b);
    });
    m.def("separated_pair", &separated_pair, py::arg("positions"), py::arg("n"));
    m.def("_audit_lower_bound_json",
          [](const WitnessGraph& wg, const EdgeColoring& c) { return to_json(audit_lower_bound(wg, c)).dump(); });
}
