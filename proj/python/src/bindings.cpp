// Copyright 2026 The grundy-spectral Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "grundy/atoms.hpp"
#include "grundy/bounds.hpp"
#include "grundy/coloring.hpp"
#include "grundy/experiments.hpp"
#include "grundy/graph.hpp"
#include "grundy/matching.hpp"
#include "grundy/serialize.hpp"
#include "grundy/spectral.hpp"
#include "grundy/verify.hpp"

namespace py = pybind11;
using namespace grundy;

namespace {

// Coefficients as Python ints (ascending powers), exact at any size.
py::list coefficients(const IntPolynomial& p) {
  py::list out;
  py::object to_int = py::module_::import("builtins").attr("int");
  for (const auto& c : p.coefficients()) out.append(to_int(c.to_string()));
  return out;
}

py::object json_to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Grundy number bounds via matching polynomials and spectra";

  // Translators run newest first, so the derived OverflowError goes last.
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<LimitError>(m, "LimitError", PyExc_RuntimeError);
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static("parse", &parse_edge_list, py::arg("text"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("complete", &graphs::complete);
  m.def("path", &graphs::path);
  m.def("cycle", &graphs::cycle);
  m.def("star", &graphs::star);
  m.def("complete_bipartite", &graphs::complete_bipartite);
  m.def("erdos_renyi", &erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("degeneracy", &degeneracy);
  m.def("is_connected", &is_connected);

  m.def("first_fit", [](const Graph& g, const std::vector<Vertex>& order) {
    return first_fit(g, order).color;
  });
  m.def(
      "grundy_exact",
      [](const Graph& g, std::uint64_t budget) {
        const auto r = grundy_exact(g, budget);
        py::dict d;
        d["value"] = r.value;
        d["exact"] = r.is_exact();
        d["ordering"] = r.witness.ordering;
        d["colors"] = r.witness.coloring.color;
        return d;
      },
      py::arg("g"), py::arg("budget") = kDefaultSearchBudget);
  m.def("grundy_bruteforce", &grundy_bruteforce);
  m.def("chromatic_number", [](const Graph& g) { return chromatic_number(g).value; });

  m.def("matching_polynomial", [](const Graph& g) { return coefficients(matching_polynomial(g)); });
  m.def("char_polynomial", [](const Graph& g) { return coefficients(char_polynomial(g)); });
  m.def("mu_max_root", &mu_max_root);
  m.def("pathtree_identity_holds", [](const Graph& g, Vertex u) { return verify_pathtree_identity(g, u); });

  m.def("lambda_max", [](const Graph& g) {
    const auto s = lambda_max(g);
    py::dict d;
    d["lambda1"] = s.lambda1;
    d["method"] = std::string(to_string(s.method));
    d["residual"] = s.residual;
    return d;
  });
  m.def("tk_lambda", [](int k) { return static_cast<double>(tk_lambda(k)); });
  m.def("quotient_sum", [](const std::vector<int>& sizes) { return quotient_sum(LayerSizeSequence{sizes}); });
  m.def("atom_lambda_lower", &atom_lambda_lower);

  m.def("binomial_tree", [](int k) { return json_to_python(atom_to_json(binomial_tree(k))); });
  m.def("enumerate_atoms", [](int k, int n_max) {
    py::list out;
    for (const Atom& a : enumerate_atoms(k, n_max)) out.append(json_to_python(atom_to_json(a)));
    return out;
  });
  m.def("is_atom", &is_atom, py::arg("g"), py::arg("layers"));
  m.def("min_quotient_sum", [](int n, int k) -> py::object {
    const auto r = min_quotient_sum(n, k);
    if (!r) return py::none();
    return py::make_tuple(r->value, r->argmin.sizes);
  });

  m.def("bound_spectral_recurrence", &bound_spectral_recurrence);
  m.def("bound_report", [](const Graph& g, const std::string& graph_id, std::uint64_t budget) {
    ReportBudget b;
    b.search_expansions = budget;
    return json_to_python(report_to_json(bound_report(g, graph_id, b)));
  }, py::arg("g"), py::arg("graph_id") = "graph", py::arg("budget") = kDefaultSearchBudget);

  m.def("sweep_csv", [](const std::string& config_text, unsigned workers) {
    const auto result = run_sweep(parse_sweep_config(config_text), workers);
    return py::make_tuple(sweep_csv(result.rows), result.truncated);
  }, py::arg("config"), py::arg("workers") = 1);
  m.def("tk_table_csv", &tk_table_csv);

  m.def("verify_suite_names", [] {
    std::vector<std::string> out;
    for (auto name : verify_suite_names()) out.emplace_back(name);
    return out;
  });
  m.def("run_verify_suite", [](const std::string& name, int max_n) {
    VerifyOptions o;
    o.max_n = max_n;
    const auto r = run_verify_suite(name, o);
    py::list props;
    for (const auto& p : r.properties) {
      py::dict d;
      d["property"] = p.property;
      d["passed"] = p.passed;
      d["checked"] = p.checked;
      props.append(d);
    }
    return props;
  }, py::arg("name"), py::arg("max_n") = 6);
}
