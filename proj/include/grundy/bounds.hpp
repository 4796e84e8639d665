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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"

namespace grundy {

/// Delta + 1.
int bound_maxdeg(int max_degree);

/// 1 + lambda1. Bounds the chromatic number, not the Grundy number; reported
/// for comparison.
double bound_wilf(double lambda1);

/// Largest k with f_k <= mu1 + 1e-9, where f_k = lambda1(T_k). A connected
/// graph with Grundy number k contains a k-atom, whose largest matching root
/// is at least f_k, so the Grundy number can be at most this k. Any value
/// that upper-bounds mu1 (such as lambda1) gives a valid bound too.
int bound_spectral_recurrence(double mu1);

/// (mu1 + 1/2)^2 / 2 + 1.
double bound_spectral_remark(double mu1);

/// (4 sqrt(n) (lambda1 + 2))^(2/3): the largest k allowed by
/// k sqrt(k) / (4 sqrt(n)) - 2 <= lambda1.
double bound_size_corollary(double lambda1, int n);

/// 2|E| / lambda1. For lambda1 == 0 (edgeless graph) returns the fallback
/// value `n`.
double bound_edges(std::size_t num_edges, double lambda1, int n);

/// d log2(n) + d + 1. The underlying result is only stated up to a constant,
/// so these constants are a heuristic choice (labelled HEURISTIC-CONSTANT in
/// every output), checked empirically but not claimed as a theorem.
/// Requires n >= 2.
double bound_degeneracy_log(int degeneracy, int n);

/// (1 + 5 ln ln n / ln n) n / log2 n, the almost-sure bound for G(n, 1/2).
/// Informational only. Requires n >= 16.
double bound_bollobas(int n);

/// Names of the bound columns, in report order.
inline constexpr std::array<std::string_view, 8> kBoundNames = {
    "maxdeg_plus_one",  "wilf",           "spectral_recurrence", "spectral_remark",
    "size_corollary",   "edges_wu_elphick", "degeneracy_log",    "bollobas_half_density",
};

struct BoundValue {
  std::optional<double> value;  ///< absent when the bound does not apply
  bool bounds_grundy = true;    ///< false for wilf and bollobas_half_density
  bool heuristic = false;       ///< degeneracy_log only
};

struct ReportBudget {
  std::uint64_t search_expansions = kDefaultSearchBudget;
  int max_exact_order = 20;  ///< skip exact Grundy / chromatic above this n
};

/// Per-graph record of exact values and every bound.
struct BoundReport {
  std::string graph_id;
  int n = 0;
  std::size_t num_edges = 0;
  int max_degree = 0;
  int degeneracy = 0;
  bool connected = true;
  double lambda1 = 0;
  std::string lambda1_method;
  std::optional<double> mu1;
  /// "mu1" or "lambda1": which value fed the two spectral bounds.
  std::string spectral_source;
  std::optional<int> exact_grundy;
  std::optional<int> exact_chromatic;
  /// Best first-fit count seen, when the exact search gave up.
  std::optional<int> grundy_lower;
  std::array<BoundValue, kBoundNames.size()> bounds;

  const BoundValue& bound(std::string_view name) const;
};

/// Computes lambda1, mu1 (when the matching polynomial is tractable), exact
/// Grundy and chromatic numbers within `budget`, and every bound. For a
/// disconnected graph the exact values are maxima over components and the
/// spectral values are those of the whole graph, which equal the component
/// maxima.
BoundReport bound_report(const Graph& g, std::string graph_id = "graph",
                         const ReportBudget& budget = {});

}  // namespace grundy
