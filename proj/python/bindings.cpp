#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rainbow/bipartite.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/io.hpp"
#include "rainbow/reduction.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verify.hpp"

namespace py = pybind11;
using namespace rainbow;

namespace {

using VertexList = std::vector<Vertex>;

std::optional<VertexList> to_list(const std::optional<Path>& p) {
  if (!p) return std::nullopt;
  return p->vertices;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["verdict"] = r.verdict;
  d["mode"] = r.mode == VerifyMode::kRainbow ? "rainbow" : "strong-rainbow";
  if (r.failing_pair) {
    d["failing_pair"] = py::make_tuple(r.failing_pair->u, r.failing_pair->v);
  } else {
    d["failing_pair"] = py::none();
  }
  py::dict witnesses;
  for (const auto& [pair, path] : r.witnesses) {
    witnesses[py::make_tuple(pair.u, pair.v)] = path.vertices;
  }
  d["witnesses"] = witnesses;
  return d;
}

py::dict solve_dict(const SolveResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["witness"] = r.witness;
  d["mode"] = r.mode == SolveMode::kRc ? "rc" : "src";
  d["nodes"] = r.stats.nodes;
  d["colorings_tested"] = r.stats.colorings_tested;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rainbow connection of edge-colored graphs: verifiers, exact solvers, "
            "the bipartite rc=2 test and the subdivision reduction.";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return build_graph(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("m", &Graph::size)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<Vertex, Vertex>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             if (!g.contains(v)) throw InputError(ErrorKind::kOutOfRange, "vertex out of range");
             VertexList out;
             for (const auto& nb : g.neighbors(v)) out.push_back(nb.vertex);
             return out;
           })
      .def("adjacent", &Graph::adjacent)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  py::class_<EdgeColoring>(m, "EdgeColoring")
      .def(py::init([](const Graph& g, std::vector<Color> colors) {
             return EdgeColoring(g, std::move(colors));
           }),
           py::arg("graph"), py::arg("colors"))
      .def_property_readonly("colors", &EdgeColoring::colors)
      .def_property_readonly("palette", &EdgeColoring::palette)
      .def("__eq__", [](const EdgeColoring& a, const EdgeColoring& b) { return a == b; })
      .def("__len__", &EdgeColoring::size);

  m.def("bfs_distances", [](const Graph& g, Vertex source) {
    auto row = bfs_distances(g, source);
    std::vector<std::optional<int>> out;
    for (Vertex v = 1; v <= g.order(); ++v) {
      out.push_back(row.reachable(v) ? std::optional<int>(row.at(v)) : std::nullopt);
    }
    return out;
  });
  m.def("diameter", &diameter);
  m.def("is_connected", &is_connected);
  m.def("is_complete", &is_complete);
  m.def("is_tree", &is_tree);
  m.def("bipartition", [](const Graph& g) -> py::object {
    auto split = bipartition(g);
    if (auto* parts = std::get_if<Bipartition>(&split)) return py::make_tuple(parts->x, parts->y);
    return py::none();
  }, "(X, Y) or None when the graph has an odd cycle.");
  m.def("complete_bipartite_params", [](const Graph& g) -> py::object {
    auto kst = complete_bipartite_params(g);
    if (auto* p = std::get_if<CompleteBipartiteParams>(&kst)) return py::make_tuple(p->s, p->t);
    return py::none();
  });

  m.def("exists_rainbow_path",
        [](const Graph& g, const EdgeColoring& c, Vertex u, Vertex v, int max_len) {
          return to_list(exists_rainbow_path(g, c, u, v, max_len));
        },
        py::arg("graph"), py::arg("coloring"), py::arg("u"), py::arg("v"), py::arg("max_len"));
  m.def("is_rainbow_connected",
        [](const Graph& g, const EdgeColoring& c, bool witnesses) {
          return report_dict(is_rainbow_connected(g, c, {.keep_witnesses = witnesses}));
        },
        py::arg("graph"), py::arg("coloring"), py::arg("witnesses") = false);
  m.def("is_strong_rainbow_connected",
        [](const Graph& g, const EdgeColoring& c, bool witnesses) {
          return report_dict(is_strong_rainbow_connected(g, c, {.keep_witnesses = witnesses}));
        },
        py::arg("graph"), py::arg("coloring"), py::arg("witnesses") = false);
  m.def("enumerate_paths_up_to", [](const Graph& g, Vertex u, Vertex v, int l) {
    std::vector<VertexList> out;
    for (auto& p : enumerate_paths_up_to(g, u, v, l)) out.push_back(std::move(p.vertices));
    return out;
  });

  m.def("kst_rc_formula", &kst_rc_formula, py::arg("s"), py::arg("t"));
  m.def("decide_rc_le_k",
        [](const Graph& g, int k, std::uint64_t budget) -> py::object {
          auto d = decide_rc_le_k(g, k, SearchBudget{budget});
          if (d.outcome == DecideOutcome::kBudgetExhausted) {
            throw BudgetExhausted("search budget exhausted");
          }
          if (d.outcome == DecideOutcome::kNo) return py::none();
          return py::cast(*d.coloring);
        },
        py::arg("graph"), py::arg("k"), py::arg("budget") = SearchBudget{}.max_nodes,
        "A coloring with at most k colors, or None.");
  m.def("rc_exact",
        [](const Graph& g, std::uint64_t budget) { return solve_dict(rc_exact(g, {budget})); },
        py::arg("graph"), py::arg("budget") = SearchBudget{}.max_nodes);
  m.def("src_exact",
        [](const Graph& g, std::uint64_t budget) { return solve_dict(src_exact(g, {budget})); },
        py::arg("graph"), py::arg("budget") = SearchBudget{}.max_nodes);

  m.def("decide_bipartite_rc2",
        [](const Graph& g, bool witness) {
          auto d = decide_bipartite_rc2(g, witness);
          py::dict out;
          out["answer"] = d.answer;
          out["reason"] = std::string(to_token(d.reason));
          out["missing_pair"] = d.missing_pair
                                    ? py::object(py::make_tuple(d.missing_pair->u, d.missing_pair->v))
                                    : py::object(py::none());
          out["params"] = d.params ? py::object(py::make_tuple(d.params->s, d.params->t))
                                   : py::object(py::none());
          out["witness"] = d.witness ? py::cast(*d.witness) : py::object(py::none());
          return out;
        },
        py::arg("graph"), py::arg("witness") = false);
  m.def("witness_2_coloring", &witness_2_coloring);

  py::class_<ReductionOutput>(m, "ReductionOutput")
      .def_readonly("g_prime", &ReductionOutput::g_prime)
      .def_readonly("c_prime", &ReductionOutput::c_prime)
      .def_readonly("subdivision_vertex", &ReductionOutput::subdivision_vertex)
      .def_readonly("fresh_color", &ReductionOutput::fresh_color)
      .def_readonly("side_x", &ReductionOutput::side_x)
      .def_readonly("side_y", &ReductionOutput::side_y);
  m.def("subdivide_reduce", &subdivide_reduce);
  m.def("contract_path", [](const ReductionOutput& out, const VertexList& p) {
    return contract_path(out, Path{p}).vertices;
  });
  m.def("expand_path", [](const ReductionOutput& out, const VertexList& p) {
    return expand_path(out, Path{p}).vertices;
  });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("serialize_graph", &serialize_graph);
  m.def("parse_coloring", [](const std::string& text, const Graph& g) { return parse_coloring(text, g); });
  m.def("serialize_coloring", &serialize_coloring);
  m.def("serialize_provenance", &serialize_provenance);
  m.def("generate",
        [](const std::string& family, int n, int s, int t, std::uint64_t p_num,
           std::uint64_t p_den, std::uint64_t seed) {
          GeneratorSpec spec;
          spec.family = parse_family(family);
          spec.n = n;
          spec.s = s;
          spec.t = t;
          spec.p_num = p_num;
          spec.p_den = p_den;
          spec.seed = seed;
          return generate(spec);
        },
        py::arg("family"), py::arg("n") = 0, py::arg("s") = 0, py::arg("t") = 0,
        py::arg("p_num") = 1, py::arg("p_den") = 2, py::arg("seed") = 0);
}
