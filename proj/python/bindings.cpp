#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fhorder/dualities.hpp"
#include "fhorder/enumeration.hpp"
#include "fhorder/errors.hpp"
#include "fhorder/fullhom.hpp"
#include "fhorder/gaps.hpp"
#include "fhorder/graph_io.hpp"
#include "fhorder/relstruct.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace fhorder;

namespace {

py::object optional_image(const std::optional<Mapping>& f) {
  if (!f) return py::none();
  return py::cast(f->image());
}

void register_graph(py::module_& m) {
  py::class_<Graph>(m, "Graph", "Finite simple undirected graph on vertices 0..n-1.")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
           py::arg("edges") = std::vector<Edge>{})
      .def_static("complete", &Graph::complete)
      .def_static("path", &Graph::path)
      .def_static("cycle", &Graph::cycle)
      .def_static("from_text", [](const std::string& s) { return parse_text(s); })
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def_static("from_inline", [](const std::string& s) { return parse_inline(s); })
      .def("to_text", &format_text)
      .def("to_graph6", &format_graph6)
      .def("__len__", &Graph::size)
      .def_property_readonly("n", &Graph::size)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + format_inline(g) + "')"; });
}

void register_core(py::module_& m) {
  m.def("neighborhood", &neighborhood);
  m.def("is_point_determining", &is_point_determining);
  m.def(
      "pd_quotient",
      [](const Graph& g) {
        auto q = pd_quotient(g);
        return py::make_tuple(q.graph, q.map.image(), q.representatives);
      },
      "Returns (quotient, map, representatives).");
  m.def("canonical_form", [](const Graph& g) { return py::bytes(canonical_form(g)); });
  m.def("remove_vertex", [](const Graph& g, Vertex v) {
    auto s = remove_vertex(g, v);
    return py::make_tuple(s.graph, s.original);
  });
  m.def("induced_subgraph", [](const Graph& g, const VertexSet& s) { return induced_subgraph(g, s).graph; });

  m.def("is_full_hom", [](const Graph& g, const Graph& h, const std::vector<Vertex>& image) {
    return is_full_hom(g, h, Mapping(h.size(), image));
  });
  m.def("induced_embedding", [](const Graph& g, const Graph& h) { return optional_image(induced_embedding(g, h)); });
  m.def(
      "find_full_hom",
      [](const Graph& g, const Graph& h) -> py::object {
        auto w = find_full_hom(g, h);
        if (!w) return py::none();
        return py::make_tuple(w->mapping.image(), w->kind == WitnessKind::embedding ? "embedding" : "general");
      },
      "Returns (image, kind) or None.");
  m.def("is_f_core", &is_f_core);
  m.def("fhom_equivalent", &fhom_equivalent);
}

void register_gaps(py::module_& m) {
  m.def("determines", &determines, py::arg("g"), py::arg("v"), py::arg("u"), py::arg("u2"));
  m.def("determining_vertex", &determining_vertex);
  m.def("compare_forest_determiners", [](const Graph& g, const VertexSet& a) {
    auto r = compare_forest_determiners(g, a);
    return py::make_tuple(r.determiners_of_aux, r.determiners_of_forest, r.equal);
  });
  m.def("removable_vertices", &removable_vertices);
  m.def("is_gap", [](const Graph& g, const Graph& h) -> py::object {
    auto cert = is_gap(g, h);
    if (!cert) return py::none();
    py::dict d;
    d["embedding"] = cert->embedding.image();
    d["removed_vertex"] = cert->removed_vertex;
    return d;
  });
  m.def("gap_extensions", &gap_extensions);
  m.def("core_chain", &core_chain);
}

void register_dualities(py::module_& m) {
  m.def("lower_set", &lower_set);
  m.def(
      "duality_frontier",
      [](const std::vector<Graph>& targets, std::size_t verify_up_to) {
        auto pair = duality_frontier(targets);
        if (verify_up_to > 0) verify(pair, verify_up_to);
        py::dict d;
        d["frontier"] = pair.frontier;
        d["targets"] = pair.targets;
        d["lower_set"] = pair.lower_set;
        d["verified_up_to"] = pair.verified_up_to;
        return d;
      },
      py::arg("targets"), py::arg("verify_up_to") = 0);
  m.def(
      "check_duality",
      [](const std::vector<Graph>& frontier, const std::vector<Graph>& targets, std::size_t n_max) {
        return check_duality(frontier, targets, n_max).counterexample;
      },
      "None when the pair is a duality on all F-cores up to n_max vertices, else the first counterexample.");
  m.def(
      "enumerate_graphs", [](std::size_t n, unsigned jobs) { return enumerate_graphs(n, jobs).members; },
      py::arg("n"), py::arg("jobs") = 1);
  m.def(
      "enumerate_pd_graphs", [](std::size_t n, unsigned jobs) { return enumerate_pd_graphs(n, jobs).members; },
      py::arg("n"), py::arg("jobs") = 1);
}

void register_relstruct(py::module_& m) {
  py::class_<RelStructure>(m, "RelStructure", "Finite relational structure.")
      .def_static("from_json", [](const std::string& s) { return parse_structure_json(s); })
      .def_static("from_graph", &from_graph)
      .def("to_json", &format_structure_json)
      .def("__len__", &RelStructure::size)
      .def_property_readonly("n", &RelStructure::size)
      .def("__eq__", [](const RelStructure& a, const RelStructure& b) { return a == b; })
      .def("__repr__", [](const RelStructure& a) { return "RelStructure(" + format_structure_json(a) + ")"; });

  m.def("has_loop", &has_loop);
  m.def("rel_is_point_determining", &rel_is_point_determining);
  m.def("rel_pd_quotient", [](const RelStructure& a) {
    auto q = rel_pd_quotient(a);
    return py::make_tuple(q.structure, q.map.image());
  });
  m.def("rel_find_full_hom",
        [](const RelStructure& a, const RelStructure& b) { return optional_image(rel_find_full_hom(a, b)); });
  m.def("rel_is_gap", [](const RelStructure& a, const RelStructure& b) -> py::object {
    auto cert = rel_is_gap(a, b);
    if (!cert) return py::none();
    py::dict d;
    d["embedding"] = cert->embedding.image();
    d["removed_vertex"] = cert->removed_vertex;
    return d;
  });
  m.def("ternary_counterexample", &ternary_counterexample);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Full homomorphism order on finite graphs and relational structures.";

  auto base = py::register_exception<Error>(m, "FhorderError", PyExc_ValueError);
  py::register_exception<CostGuardError>(m, "CostGuardError", base.ptr());
  py::register_exception<UnsupportedArityError>(m, "UnsupportedArityError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  register_graph(m);
  register_core(m);
  register_gaps(m);
  register_dualities(m);
  register_relstruct(m);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
