#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "asep/benchmark.hpp"
#include "asep/centrality.hpp"
#include "asep/generator.hpp"
#include "asep/oracle.hpp"
#include "asep/recombination.hpp"
#include "asep/removal.hpp"
#include "asep/solver.hpp"

namespace py = pybind11;
using namespace asep;

namespace {

Graph make_graph(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimum alpha-separator search";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             auto span = g.neighbors(v);
             return std::vector<Vertex>(span.begin(), span.end());
           })
      .def("edges", &Graph::edges)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("parse_edge_list", &parse_edge_list, py::arg("text"), py::arg("one_based") = false);
  m.def("load_edge_list", &load_edge_list, py::arg("path"), py::arg("one_based") = false);
  m.def("threshold", &threshold, py::arg("alpha"), py::arg("n"));

  py::enum_<Objective>(m, "Objective")
      .value("LARGEST", Objective::LargestExcess)
      .value("TOTAL", Objective::TotalExcess)
      .value("COUNT", Objective::OversizedCount);

  m.def(
      "component_sizes",
      [](const Graph& g, const std::vector<Vertex>& removed) {
        auto view = components_after_removal(g, removed);
        return std::vector<std::size_t>(view.sizes().begin(), view.sizes().end());
      },
      py::arg("graph"), py::arg("removed"));
  m.def(
      "objective",
      [](const Graph& g, const std::vector<Vertex>& removed, std::size_t tau, Objective kind) {
        return evaluate(kind, components_after_removal(g, removed), tau);
      },
      py::arg("graph"), py::arg("removed"), py::arg("tau"), py::arg("kind") = Objective::LargestExcess);
  m.def(
      "removal_eval",
      [](const Graph& g, const std::vector<Vertex>& removed, Vertex w, std::size_t tau, Objective kind) {
        return removal_eval(g, components_after_removal(g, removed), w, tau, kind);
      },
      py::arg("graph"), py::arg("removed"), py::arg("w"), py::arg("tau"), py::arg("kind") = Objective::LargestExcess);
  m.def("betweenness", &betweenness, py::arg("graph"));
  m.def("accept_prob", &accept_prob, py::arg("delta"), py::arg("streak"), py::arg("max_streak"));
  m.def(
      "node_frequencies",
      [](std::size_t n, const std::vector<std::vector<Vertex>>& sets) {
        return node_frequencies(n, std::span<const std::vector<Vertex>>(sets));
      },
      py::arg("n"), py::arg("sets"));

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("alpha", &SolverConfig::alpha)
      .def_readwrite("population_size", &SolverConfig::population_size)
      .def_readwrite("reference_size", &SolverConfig::reference_size)
      .def_readwrite("elite_size", &SolverConfig::elite_size)
      .def_readwrite("eta", &SolverConfig::eta)
      .def_readwrite("rho", &SolverConfig::rho)
      .def_readwrite("max_streak", &SolverConfig::max_streak)
      .def_readwrite("gamma", &SolverConfig::gamma)
      .def_readwrite("mu", &SolverConfig::mu)
      .def_readwrite("time_limit", &SolverConfig::time_limit)
      .def_readwrite("stagnation_limit", &SolverConfig::stagnation_limit)
      .def_readwrite("max_generations", &SolverConfig::max_generations)
      .def_readwrite("seed", &SolverConfig::seed)
      .def_readwrite("objective", &SolverConfig::objective)
      .def_readwrite("tabu", &SolverConfig::tabu)
      .def_readwrite("threads", &SolverConfig::threads)
      .def("set_population_size", &SolverConfig::set_population_size)
      .def("validate", &SolverConfig::validate)
      .def("to_key_values", [](const SolverConfig& c) { return to_key_values(c); })
      .def_static("from_key_values", [](const std::string& text) { return parse_key_values(text); });

  py::class_<TimelineEntry>(m, "TimelineEntry")
      .def_readonly("size", &TimelineEntry::size)
      .def_readonly("seconds", &TimelineEntry::seconds)
      .def_readonly("generation", &TimelineEntry::generation)
      .def_readonly("nodes", &TimelineEntry::nodes);

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("best", &SolveReport::best)
      .def_readonly("best_size", &SolveReport::best_size)
      .def_readonly("construction_best", &SolveReport::construction_best)
      .def_readonly("time_to_best", &SolveReport::time_to_best)
      .def_readonly("total_time", &SolveReport::total_time)
      .def_readonly("generations", &SolveReport::generations)
      .def_readonly("timeline", &SolveReport::timeline)
      .def("to_json", &SolveReport::to_json, py::arg("include_timing") = true);

  m.def(
      "solve",
      [](const Graph& g, const SolverConfig& config, const std::string& variant) {
        py::gil_scoped_release release;
        return run_variant(g, config, parse_variant(variant));
      },
      py::arg("graph"), py::arg("config") = SolverConfig{}, py::arg("variant") = "fis");

  m.def(
      "generate_er",
      [](std::size_t n, double p, std::uint64_t seed, const std::string& model) {
        return generate_er({n, p, seed, parse_model(model)});
      },
      py::arg("n"), py::arg("p"), py::arg("seed") = 1, py::arg("model") = "incremental");

  m.def(
      "brute_force_min_separator",
      [](const Graph& g, double alpha) {
        auto r = brute_force_min_separator(g, alpha);
        return py::make_tuple(r.size, r.witness);
      },
      py::arg("graph"), py::arg("alpha"));
  m.def("brute_force_vertex_cover", &brute_force_vertex_cover, py::arg("graph"));
  m.def(
      "check_separator",
      [](const Graph& g, const std::vector<Vertex>& nodes, std::size_t tau) { return check_separator(g, nodes, tau); },
      py::arg("graph"), py::arg("nodes"), py::arg("tau"));
}
