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

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "grundy/atoms.hpp"
#include "grundy/bounds.hpp"
#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"
#include "grundy/polynomial.hpp"

namespace grundy {

using Json = nlohmann::json;

/// {"n": 4, "edges": [[0, 1], ...]}
Json graph_to_json(const Graph& g);
/// Throws GraphError on malformed input.
Graph graph_from_json(const Json& j);

/// {"n", "edges", "layers", "seed"}.
Json atom_to_json(const Atom& atom);
/// Throws GraphError unless the layers describe an atom of the graph.
Atom atom_from_json(const Json& j);

/// Coefficients, constant term first. Values outside the int64 range are
/// written as decimal strings.
Json polynomial_to_json(const IntPolynomial& p);
Json polynomial_to_json(const BigPolynomial& p);
/// Accepts both integer and decimal-string entries.
BigPolynomial big_polynomial_from_json(const Json& j);

/// {"ordering": [...], "colors": [...], "num_colors": k}, colors 1-based.
Json witness_to_json(const GrundyWitness& w);

Json report_to_json(const BoundReport& r);

/// Fixed header of report_csv_row, newline-terminated:
///
///     graph_id,n,num_edges,max_degree,degeneracy,connected,lambda1,
///     lambda1_method,mu1,exact_grundy,exact_chromatic,grundy_lower,
///     maxdeg_plus_one,wilf,spectral_recurrence,spectral_remark,
///     size_corollary,edges_wu_elphick,degeneracy_log_heuristic_constant,
///     bollobas_half_density
///
/// Unknown or inapplicable cells are empty. `connected` is 0/1.
std::string report_csv_header();
std::string report_csv_row(const BoundReport& r);

/// "k,f_k,sqrt_2k_minus_1,gap" followed by one row for each k in 1..k_max,
/// where sqrt_2k_minus_1 is sqrt(2(k-1)) and gap is that value minus f_k.
/// Reals are printed in shortest round-trip form.
std::string tk_table_csv(int k_max);

/// Shortest decimal string that parses back to `v`.
std::string format_real(double v);

}  // namespace grundy
