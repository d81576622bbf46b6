#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "spectight/campaigns.hpp"
#include "spectight/fixtures.hpp"
#include "spectight/io.hpp"
#include "spectight/mapping.hpp"

namespace py = pybind11;
namespace st = spectight;

namespace {

py::object json_to_py(const st::json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

st::Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                           const std::vector<double>& weights) {
  return st::build_graph(n, edges, weights);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph Laplacian lambda2 multiplicity, sign-graph, tightness and Heawood-bound toolkit";

  py::class_<st::Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"),
           py::arg("weights") = std::vector<double>{})
      .def_property_readonly("n_vertices", &st::Graph::n_vertices)
      .def_property_readonly("edges",
                             [](const st::Graph& g) {
                               std::vector<std::tuple<int, int, double>> out;
                               for (const st::Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.weight);
                               return out;
                             })
      .def_property_readonly("declared_genus",
                             [](const st::Graph& g) -> py::object {
                               if (g.declared_genus()) return py::int_(*g.declared_genus());
                               return py::none();
                             })
      .def("neighbors", &st::Graph::neighbors)
      .def("__repr__", [](const st::Graph& g) {
        std::ostringstream ss;
        ss << "Graph(n=" << g.n_vertices() << ", edges=" << g.edges().size() << ")";
        return ss.str();
      });

  m.def("path_graph", &st::path_graph, py::arg("n"));
  m.def("cycle_graph", &st::cycle_graph, py::arg("n"));
  m.def("complete_graph", &st::complete_graph, py::arg("n"));
  m.def("triangular_torus_graph", &st::triangular_torus_graph, py::arg("n"));
  m.def("hamming_graph", &st::hamming_graph, py::arg("alphabet_sizes"));
  m.def("cartesian_product",
        py::overload_cast<const st::Graph&, const st::Graph&>(&st::cartesian_product));
  m.def("is_connected", &st::is_connected);

  py::class_<st::Eigenspace>(m, "Eigenspace")
      .def_readonly("eigenvalue", &st::Eigenspace::eigenvalue)
      .def_readonly("dimension", &st::Eigenspace::dimension)
      .def_readonly("basis", &st::Eigenspace::basis);

  m.def(
      "spectrum",
      [](const st::Graph& g, std::optional<std::vector<double>> potential, double rel_tol) {
        const st::Spectrum s = st::eigendecompose(st::build_operator(g, std::move(potential)));
        return json_to_py(st::spectrum_report(s, st::group_eigenvalues(s, rel_tol)));
      },
      py::arg("graph"), py::arg("potential") = py::none(), py::arg("rel_tol") = st::kDefaultGroupTol,
      "Eigenvalues, degeneracy groups and the solver residual as a dict");

  m.def(
      "lambda2_eigenspace",
      [](const st::Graph& g, std::optional<std::vector<double>> potential, double rel_tol) {
        return st::lambda2_eigenspace(st::eigendecompose(st::build_operator(g, std::move(potential))),
                                      rel_tol);
      },
      py::arg("graph"), py::arg("potential") = py::none(), py::arg("rel_tol") = st::kDefaultGroupTol);

  m.def(
      "weak_sign_graphs",
      [](const st::Graph& g, const st::VertexFunction& u) {
        return json_to_py(st::to_json(st::sign_graphs(g, u, st::SignMode::weak)));
      },
      py::arg("graph"), py::arg("u"));
  m.def(
      "strong_sign_graphs",
      [](const st::Graph& g, const st::VertexFunction& u) {
        return json_to_py(st::to_json(st::sign_graphs(g, u, st::SignMode::strong)));
      },
      py::arg("graph"), py::arg("u"));

  m.def(
      "check_courant",
      [](const st::Graph& g, std::optional<std::vector<double>> potential) {
        const st::Spectrum s = st::eigendecompose(st::build_operator(g, std::move(potential)));
        return json_to_py(st::to_json(st::check_courant(g, s)));
      },
      py::arg("graph"), py::arg("potential") = py::none());

  m.def(
      "check_lemma1",
      [](const st::Graph& g, const st::VertexFunction& u) {
        return json_to_py(st::to_json(st::check_lemma1(g, u)));
      },
      py::arg("graph"), py::arg("u"));

  m.def(
      "is_tight_function",
      [](const st::Graph& g, const st::VertexFunction& u) {
        return json_to_py(st::to_json(st::is_tight_function(g, u)));
      },
      py::arg("graph"), py::arg("u"));

  m.def(
      "is_tight_space",
      [](const st::Graph& g, const st::Eigenspace& e, std::uint64_t seed, int n_random) {
        return json_to_py(st::to_json(st::is_tight_space(g, e, {seed, n_random})));
      },
      py::arg("graph"), py::arg("eigenspace"), py::arg("seed") = 42, py::arg("n_random") = 1000);

  m.def("heawood_number", &st::heawood_number, py::arg("genus"));

  m.def(
      "verify_bound",
      [](const st::Graph& g, const st::Eigenspace& e) { return json_to_py(st::to_json(st::verify_bound(g, e))); },
      py::arg("graph"), py::arg("eigenspace"));

  m.def(
      "critical_points",
      [](const st::Graph& g, const st::RotationSystem& rotation, const st::VertexFunction& u) {
        return json_to_py(st::to_json(st::critical_points(st::trace_embedding(g, rotation), u)));
      },
      py::arg("graph"), py::arg("rotation"), py::arg("u"));

  m.def(
      "trace_embedding",
      [](const st::Graph& g, const st::RotationSystem& rotation) {
        const st::CombinatorialSurface s = st::trace_embedding(g, rotation);
        py::dict d;
        d["faces"] = s.faces;
        d["euler_characteristic"] = s.euler_characteristic;
        d["genus"] = s.genus;
        return d;
      },
      py::arg("graph"), py::arg("rotation"));

  m.def("triangular_torus_rotation", &st::triangular_torus_rotation, py::arg("n"));
  m.def("k7_torus_rotation", &st::k7_torus_rotation);
  m.def("natural_rotation", &st::natural_rotation, py::arg("graph"));

  m.def(
      "export_off",
      [](const st::Graph& g, const st::RotationSystem& rotation, std::array<int, 3> projection,
         double rel_tol) {
        const st::CombinatorialSurface surface = st::trace_embedding(g, rotation);
        const st::Eigenspace e =
            st::lambda2_eigenspace(st::eigendecompose(st::build_operator(g)), rel_tol);
        st::Mapping map = st::build_mapping(g, e);
        st::CombinatorialSurface mapped = surface;
        if (!map.pathological_edges.empty()) {
          map = st::contract_pathological(map);
          for (const auto& [a, b] : map.contraction_log) mapped = st::contract_surface_edge(mapped, a, b);
        }
        std::ostringstream out;
        st::write_off(out, map, mapped, projection);
        return out.str();
      },
      py::arg("graph"), py::arg("rotation"), py::arg("projection") = std::array<int, 3>{0, 1, 2},
      py::arg("rel_tol") = st::kDefaultGroupTol,
      "Build the lambda2 mapping, repair pathologies, and return the OFF mesh text");

  m.def(
      "run_suite",
      [](const std::string& name, int trials, std::uint64_t seed, int dirs) {
        st::RunConfig cfg;
        cfg.seed = seed;
        cfg.n_random_directions = dirs;
        return json_to_py(st::to_json(st::run_suite(name, trials, cfg)));
      },
      py::arg("name"), py::arg("trials") = 100, py::arg("seed") = 42, py::arg("dirs") = 1000);
  m.def("suite_names", [] { return st::suite_names(); });

  m.def("c20_tight_wave", &st::c20_tight_wave, "Tight single-extremum wave on the 20-cycle");
  m.def("c20_nontight_wave", &st::c20_nontight_wave, "Stored non-tight two-hump fixture on the 20-cycle");
}
