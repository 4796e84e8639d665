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

#include "grundy/serialize.hpp"

#include <charconv>
#include <cmath>

#include "grundy/spectral.hpp"

namespace grundy {

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw GraphError("edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges);
  } catch (const Json::exception& ex) {
    throw GraphError(std::string("bad graph JSON: ") + ex.what());
  }
}

Json atom_to_json(const Atom& atom) {
  Json j = graph_to_json(atom.graph);
  j["layers"] = atom.layers;
  j["seed"] = atom.seed;
  return j;
}

Atom atom_from_json(const Json& j) {
  Atom atom;
  atom.graph = graph_from_json(j);
  try {
    atom.layers = j.at("layers").get<Layers>();
    atom.seed = j.at("seed").get<Vertex>();
  } catch (const Json::exception& ex) {
    throw GraphError(std::string("bad atom JSON: ") + ex.what());
  }
  if (!is_atom(atom.graph, atom.layers)) throw GraphError("layers do not describe an atom");
  if (atom.layers.front().size() != 1 || atom.layers.front().front() != atom.seed) {
    throw GraphError("seed must be the single vertex of the first layer");
  }
  return atom;
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) {
    if (c.fits_int64()) {
      out.push_back(static_cast<std::int64_t>(c.raw()));
    } else {
      out.push_back(c.to_string());
    }
  }
  return out;
}

Json polynomial_to_json(const BigPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) {
    if (c.fits_slong_p()) {
      out.push_back(static_cast<std::int64_t>(c.get_si()));
    } else {
      out.push_back(c.get_str());
    }
  }
  return out;
}

BigPolynomial big_polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<mpz_class> c;
  for (const auto& v : j) {
    if (v.is_number_integer()) {
      c.emplace_back(static_cast<long>(v.get<std::int64_t>()));
    } else if (v.is_string()) {
      mpz_class z;
      if (z.set_str(v.get<std::string>(), 10) != 0) {
        throw std::invalid_argument("bad coefficient " + v.get<std::string>());
      }
      c.push_back(z);
    } else {
      throw std::invalid_argument("coefficient must be an integer or decimal string");
    }
  }
  return BigPolynomial(std::move(c));
}

Json witness_to_json(const GrundyWitness& w) {
  return {{"ordering", w.ordering},
          {"colors", w.coloring.color},
          {"num_colors", w.coloring.num_colors}};
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json report_to_json(const BoundReport& r) {
  Json bounds = Json::object();
  for (std::size_t i = 0; i < kBoundNames.size(); ++i) {
    const auto& b = r.bounds[i];
    Json entry = {{"value", optional_json(b.value)},
                  {"applicable", b.value.has_value()},
                  {"bounds_grundy", b.bounds_grundy}};
    if (b.heuristic) entry["label"] = "HEURISTIC-CONSTANT";
    bounds[std::string(kBoundNames[i])] = std::move(entry);
  }
  Json j = {
      {"graph_id", r.graph_id},
      {"n", r.n},
      {"num_edges", r.num_edges},
      {"max_degree", r.max_degree},
      {"degeneracy", r.degeneracy},
      {"connected", r.connected},
      {"lambda1", r.lambda1},
      {"lambda1_method", r.lambda1_method},
      {"mu1", optional_json(r.mu1)},
      {"spectral_source", r.spectral_source},
      {"exact_grundy", optional_json(r.exact_grundy)},
      {"exact_chromatic", optional_json(r.exact_chromatic)},
      {"grundy_lower", optional_json(r.grundy_lower)},
      {"exact_status", r.exact_grundy ? "exact" : "unknown"},
      {"bounds", std::move(bounds)},
  };
  if (!r.connected) {
    j["disconnected_convention"] =
        "exact values are maxima over components; spectral values are whole-graph";
  }
  return j;
}

std::string report_csv_header() {
  std::string h =
      "graph_id,n,num_edges,max_degree,degeneracy,connected,lambda1,lambda1_method,mu1,"
      "exact_grundy,exact_chromatic,grundy_lower";
  for (auto name : kBoundNames) {
    h += ',';
    h += name;
    if (name == "degeneracy_log") h += "_heuristic_constant";
  }
  return h + '\n';
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_floating_point_v<T>) {
    return format_real(*v);
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

std::string report_csv_row(const BoundReport& r) {
  std::string row = csv_escape(r.graph_id);
  auto add = [&](const std::string& s) {
    row += ',';
    row += s;
  };
  add(std::to_string(r.n));
  add(std::to_string(r.num_edges));
  add(std::to_string(r.max_degree));
  add(std::to_string(r.degeneracy));
  add(r.connected ? "1" : "0");
  add(format_real(r.lambda1));
  add(r.lambda1_method);
  add(cell(r.mu1));
  add(cell(r.exact_grundy));
  add(cell(r.exact_chromatic));
  add(cell(r.grundy_lower));
  for (const auto& b : r.bounds) add(cell(b.value));
  return row + '\n';
}

std::string tk_table_csv(int k_max) {
  std::string out = "k,f_k,sqrt_2k_minus_1,gap\n";
  const auto f = tk_lambda_table(k_max);
  for (int k = 1; k <= k_max; ++k) {
    const long double upper = std::sqrt(2.0L * (k - 1));
    const long double fk = f[k - 1];
    out += std::to_string(k);
    out += ',';
    out += format_real(static_cast<double>(fk));
    out += ',';
    out += format_real(static_cast<double>(upper));
    out += ',';
    out += format_real(static_cast<double>(upper - fk));
    out += '\n';
  }
  return out;
}

}  // namespace grundy
