#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "domgraph/bounds.hpp"
#include "domgraph/distances.hpp"
#include "domgraph/domination.hpp"
#include "domgraph/error.hpp"
#include "domgraph/graph_io.hpp"
#include "domgraph/harness.hpp"
#include "domgraph/report_json.hpp"
#include "domgraph/treelift.hpp"

namespace py = pybind11;
using namespace domgraph;

namespace {

ReportConfig make_config(const std::vector<int>& r_values) {
  ReportConfig config;
  config.r_values = r_values;
  validate(config);
  return config;
}

py::dict edges_dict(const std::vector<Edge>& edges, const char* key, py::dict d) {
  py::list out;
  for (const Edge& e : edges) out.append(py::make_tuple(e.u, e.v));
  d[key] = out;
  return d;
}

}  // namespace

PYBIND11_MODULE(_domgraph, m) {
  m.doc() = "Exact domination numbers and distance lower bounds for small graphs";

  static py::exception<Error> error_type(m, "DomgraphError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int order, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             for (auto [u, v] : edges) es.push_back({u, v});
             return Graph::from_edges(order, es);
           }),
           py::arg("order"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def_static("from_edgelist", [](const std::string& s) { return parse_edgelist(s); })
      .def("to_graph6", &to_graph6)
      .def("to_edgelist", &to_edgelist)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("neighbors", [](const Graph& g, int v) {
        const auto n = g.neighbors(v);
        return std::vector<int>(n.begin(), n.end());
      })
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  m.def("read_graph_file", [](const std::filesystem::path& path, const std::string& format) {
    return read_graph_file(path, parse_format(format));
  }, py::arg("path"), py::arg("format") = "graph6");

  m.def("is_dominating_set", [](const Graph& g, const std::vector<int>& s) { return is_dominating_set(g, s); });
  m.def("gamma_exact", [](const Graph& g, bool enumerate_all) {
    const auto r = gamma_exact(g, {.enumerate_all = enumerate_all});
    py::dict d;
    d["gamma"] = r.gamma;
    d["witness"] = r.witness;
    if (r.all_min_sets) d["all_min_sets"] = *r.all_min_sets;
    return d;
  }, py::arg("g"), py::arg("enumerate_all") = false);
  m.def("gamma_bruteforce_oracle", [](const Graph& g, int max_order) {
    const auto r = gamma_bruteforce_oracle(g, max_order);
    return py::make_tuple(r.gamma, r.witness);
  }, py::arg("g"), py::arg("max_order") = kDefaultMaxEnumerationOrder);
  m.def("enumerate_min_dominating_sets", &enumerate_min_dominating_sets, py::arg("g"),
        py::arg("max_order") = kDefaultMaxEnumerationOrder);

  m.def("distances", [](const Graph& g) {
    const DistanceMatrix dm(g);
    std::vector<std::vector<int>> rows;
    for (int v = 0; v < g.order(); ++v) {
      const auto r = dm.row(v);
      rows.emplace_back(r.begin(), r.end());
    }
    return rows;
  });
  m.def("diameter", [](const Graph& g) { return DistanceMatrix(g).diameter(); });
  m.def("wiener_index", py::overload_cast<const Graph&>(&wiener_index));
  m.def("average_distance", [](const Graph& g) {
    const Rational r = average_distance(g);
    return py::make_tuple(r.num(), r.den());
  });
  m.def("boundary", [](const Graph& g) {
    const auto bi = boundary_and_set_ecc(g, DistanceMatrix(g));
    return py::make_tuple(bi.boundary, bi.ecc_of_boundary);
  });

  m.def("analyze_json", [](const Graph& g, const std::vector<int>& r_values) {
    const auto report = assemble_report(g, make_config(r_values));
    return to_jsonl_line(report_to_json(report, 1, g.order() <= 62 ? to_graph6(g) : ""));
  }, py::arg("g"), py::arg("r_values") = std::vector<int>{3, 4, 5});

  m.def("verify_corpus", [](const std::filesystem::path& path, const std::string& format,
                            const std::vector<int>& r_values, bool strict, unsigned jobs, bool check_lift) {
    CorpusConfig config;
    config.format = parse_format(format);
    config.report = make_config(r_values);
    config.strict = strict;
    config.jobs = jobs;
    config.check_lift = check_lift;
    std::ostringstream jsonl;
    CorpusSummary s;
    {
      py::gil_scoped_release release;
      s = run_corpus_verify(path, config, &jsonl);
    }
    py::dict d;
    d["graphs_processed"] = s.graphs_processed;
    d["violations"] = s.violations;
    d["equality_counts"] = s.equality_counts;
    py::list skipped;
    for (const auto& k : s.skipped) skipped.append(py::make_tuple(k.line, k.message));
    d["skipped"] = skipped;
    d["jsonl"] = jsonl.str();
    return d;
  }, py::arg("path"), py::arg("format") = "graph6", py::arg("r_values") = std::vector<int>{3, 4, 5},
     py::arg("strict") = false, py::arg("jobs") = 1, py::arg("check_lift") = false);

  m.def("find_tight_instances", [](const std::filesystem::path& path, const std::string& bound,
                                   const std::string& format) {
    CorpusConfig config;
    config.format = parse_format(format);
    return find_tight_instances(path, bound, config);
  }, py::arg("path"), py::arg("bound"), py::arg("format") = "graph6");

  m.def("lift", [](const Graph& g, const std::vector<int>& set) {
    const auto lift = lift_gamma_set_to_spanning_tree(g, set);
    const auto check = verify_lift(g, lift, set);
    py::dict d;
    edges_dict(lift.tree_edges, "tree_edges", d);
    edges_dict(lift.connector_edges, "connector_edges", d);
    d["dominator_of"] = lift.dominator_of;
    d["verified"] = check.ok;
    d["reason"] = std::string(to_string(check.reason));
    return d;
  });

  m.def("counterexample", [] {
    const auto rep = fodig_counterexample_demo();
    py::dict d;
    d["graph"] = rep.graph;
    d["labels"] = rep.labels;
    d["gamma"] = rep.gamma;
    d["gamma_set"] = rep.gamma_set;
    d["diameter"] = rep.diameter;
    d["diametral_path"] = rep.diametral_path;
    d["path_induced"] = rep.path_induced;
    edges_dict(rep.joining_edges, "joining_edges", d);
    d["joining_edge_count"] = rep.joining_edge_count;
    d["fodig_claim_bound"] = rep.fodig_claim_bound;
    d["refutes_claim"] = rep.refutes_claim;
    d["all_properties_hold"] = rep.all_properties_hold();
    return d;
  });
}
