// Python bindings. Reports cross the boundary as JSON text and are decoded
// into dicts by the pure-Python wrapper in graphpot/__init__.py.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphpot/error.hpp"
#include "graphpot/io.hpp"
#include "graphpot/verify.hpp"

namespace py = pybind11;
using namespace graphpot;

namespace {

Coloring coloring_for(const TrivalentGraph& g, const std::optional<std::vector<int>>& bits, int parity) {
  if (!bits) return Coloring::with_parity(g.num_vertices(), parity);
  Coloring c;
  for (int b : *bits) c.bits.push_back(static_cast<std::uint8_t>(b));
  check_coloring(g, c);
  return c;
}

TrivalentGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges, std::optional<int> half) {
  std::vector<Edge> e;
  for (const auto& [u, v] : edges) e.push_back({u, v});
  return TrivalentGraph(n, std::move(e), half);
}

std::vector<std::pair<int, int>> edge_list(const TrivalentGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph potentials: periods, polytopes and verification";

  auto base = py::register_exception<Error>(m, "GraphpotError", PyExc_RuntimeError);
  py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<RangeError>(m, "RangeError", base.ptr());

  py::class_<TrivalentGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("num_vertices"), py::arg("edges"), py::arg("half_edge") = py::none())
      .def_property_readonly("num_vertices", &TrivalentGraph::num_vertices)
      .def_property_readonly("num_edges", &TrivalentGraph::num_edges)
      .def_property_readonly("edges", &edge_list)
      .def_property_readonly("half_edge", &TrivalentGraph::half_edge)
      .def_property_readonly("genus", [](const TrivalentGraph& g) { return genus(g); })
      .def_property_readonly("bridges", [](const TrivalentGraph& g) { return bridges(g); })
      .def_property_readonly("num_loops", &TrivalentGraph::num_loops)
      .def("to_json", [](const TrivalentGraph& g) { return graph_to_json(g).dump(); })
      .def("__eq__", [](const TrivalentGraph& a, const TrivalentGraph& b) { return a == b; })
      .def("__repr__", [](const TrivalentGraph& g) {
        return "Graph(" + std::to_string(g.num_vertices()) + " vertices, genus " + std::to_string(genus(g)) + ")";
      });

  m.def("named_graph", [](const std::string& name) {
    auto g = named_graph(name);
    if (!g) throw py::key_error("no builtin graph named " + name);
    return *g;
  });
  m.def("graph_from_json", [](const std::string& text) {
    const auto spec = graph_from_json(Json::parse(text));
    std::optional<std::vector<int>> bits;
    if (spec.coloring) bits = std::vector<int>(spec.coloring->bits.begin(), spec.coloring->bits.end());
    return std::make_pair(spec.graph, bits);
  });
  m.def("enumerate_graphs", &enumerate_trivalent, py::arg("genus"));
  m.def("canonical_id", [](const TrivalentGraph& g, std::optional<std::vector<int>> coloring, int parity) {
    const auto form = canonical_form(g, coloring_for(g, coloring, parity));
    return py::bytes(form);
  }, py::arg("graph"), py::arg("coloring") = py::none(), py::arg("parity") = 1);
  m.def("mutate", [](const TrivalentGraph& g, int edge, std::optional<std::vector<int>> coloring, int parity) {
    const auto [h, c] = elementary_transformation(g, coloring_for(g, coloring, parity), edge);
    return std::make_pair(h, std::vector<int>(c.bits.begin(), c.bits.end()));
  }, py::arg("graph"), py::arg("edge"), py::arg("coloring") = py::none(), py::arg("parity") = 1);

  m.def("potential_json", [](const TrivalentGraph& g, std::optional<std::vector<int>> coloring, int parity) {
    return potential_to_json(graph_potential(g, coloring_for(g, coloring, parity))).dump();
  }, py::arg("graph"), py::arg("coloring") = py::none(), py::arg("parity") = 1);
  m.def("conifold_value", [](const TrivalentGraph& g, std::optional<std::vector<int>> coloring, int parity) {
    return conifold_value(graph_potential(g, coloring_for(g, coloring, parity))).get_str();
  }, py::arg("graph"), py::arg("coloring") = py::none(), py::arg("parity") = 1);

  m.def("period", [](const TrivalentGraph& g, int n, std::optional<std::vector<int>> coloring, int parity,
                     const std::string& engine) {
    const auto c = coloring_for(g, coloring, parity);
    const Engine e = parse_engine(engine);
    py::gil_scoped_release release;
    const mpz_class v = e == Engine::kNaive ? period_naive(graph_potential(g, c), n) : period_contract(g, c, n);
    return v.get_str();
  }, py::arg("graph"), py::arg("n"), py::arg("coloring") = py::none(), py::arg("parity") = 1,
     py::arg("engine") = "contract");
  m.def("periods_json", [](const TrivalentGraph& g, int max_n, std::optional<std::vector<int>> coloring, int parity,
                           const std::string& engine) {
    const auto c = coloring_for(g, coloring, parity);
    const Engine e = parse_engine(engine);
    py::gil_scoped_release release;
    return to_json(period_sequence(g, c, max_n, e)).dump();
  }, py::arg("graph"), py::arg("max_n"), py::arg("coloring") = py::none(), py::arg("parity") = 1,
     py::arg("engine") = "contract");

  m.def("polytope_json", [](const TrivalentGraph& g, std::optional<std::vector<int>> coloring, int parity) {
    return to_json(polar_dual(g, coloring_for(g, coloring, parity))).dump();
  }, py::arg("graph"), py::arg("coloring") = py::none(), py::arg("parity") = 1);
  m.def("lattice_points_json", [](const TrivalentGraph& g, std::optional<std::vector<int>> coloring, int parity) {
    return to_json(classify_lattice_points(g, coloring_for(g, coloring, parity))).dump();
  }, py::arg("graph"), py::arg("coloring") = py::none(), py::arg("parity") = 1);
  m.def("terminal_json", [](const TrivalentGraph& g, std::optional<std::vector<int>> coloring, int parity) {
    return to_json(is_terminal(g, coloring_for(g, coloring, parity))).dump();
  }, py::arg("graph"), py::arg("coloring") = py::none(), py::arg("parity") = 1);
  m.def("triangulation_json", [](const TrivalentGraph& g, std::optional<std::vector<int>> coloring, int parity,
                                 std::uint64_t seed, int shuffles, int height_steps) {
    const auto c = coloring_for(g, coloring, parity);
    TriangulationOptions opts;
    opts.seed = seed;
    opts.shuffles = shuffles;
    opts.height_steps = height_steps;
    py::gil_scoped_release release;
    return to_json(triangulate_fan(g, c, opts)).dump();
  }, py::arg("graph"), py::arg("coloring") = py::none(), py::arg("parity") = 1, py::arg("seed") = 1,
     py::arg("shuffles") = TriangulationOptions{}.shuffles,
     py::arg("height_steps") = TriangulationOptions{}.height_steps);
  m.def("manon_json", [](const TrivalentGraph& g) { return to_json(manon_original(g)).dump(); });
  m.def("export_text", [](const TrivalentGraph& g, std::optional<std::vector<int>> coloring, int parity) {
    return export_text(polar_dual(g, coloring_for(g, coloring, parity)));
  }, py::arg("graph"), py::arg("coloring") = py::none(), py::arg("parity") = 1);

  m.def("verify_json", [](const std::string& scope, int jobs) {
    const auto s = parse_scope(scope);
    py::gil_scoped_release release;
    return to_json(run_verify(s, GoldenTable::embedded(), jobs)).dump();
  }, py::arg("scope") = "quick", py::arg("jobs") = 1);
}
