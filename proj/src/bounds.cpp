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

#include "grundy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "grundy/matching.hpp"
#include "grundy/spectral.hpp"

namespace grundy {

int bound_maxdeg(int max_degree) { return max_degree + 1; }

double bound_wilf(double lambda1) { return 1.0 + lambda1; }

int bound_spectral_recurrence(double mu1) {
  if (mu1 < 0) throw std::invalid_argument("mu1 must be nonnegative");
  const long double limit = static_cast<long double>(mu1) + 1e-9L;
  long double f = 0;  // f_1
  int k = 1;
  for (;;) {
    const long double next = (f + std::sqrt(f * f + 4)) / 2;
    if (next > limit) return k;
    f = next;
    ++k;
  }
}

double bound_spectral_remark(double mu1) {
  return (mu1 + 0.5) * (mu1 + 0.5) / 2 + 1;
}

double bound_size_corollary(double lambda1, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return std::pow(4 * std::sqrt(static_cast<double>(n)) * (lambda1 + 2), 2.0 / 3.0);
}

double bound_edges(std::size_t num_edges, double lambda1, int n) {
  if (lambda1 <= 0) return n;
  return 2.0 * static_cast<double>(num_edges) / lambda1;
}

double bound_degeneracy_log(int degeneracy, int n) {
  if (n < 2) throw std::invalid_argument("bound_degeneracy_log needs n >= 2");
  return degeneracy * std::log2(static_cast<double>(n)) + degeneracy + 1;
}

double bound_bollobas(int n) {
  if (n < 16) throw std::invalid_argument("bound_bollobas needs n >= 16");
  const double ln = std::log(static_cast<double>(n));
  return (1 + 5 * std::log(ln) / ln) * n / std::log2(static_cast<double>(n));
}

const BoundValue& BoundReport::bound(std::string_view name) const {
  for (std::size_t i = 0; i < kBoundNames.size(); ++i) {
    if (kBoundNames[i] == name) return bounds[i];
  }
  throw std::out_of_range("unknown bound " + std::string(name));
}

BoundReport bound_report(const Graph& g, std::string graph_id, const ReportBudget& budget) {
  BoundReport r;
  r.graph_id = std::move(graph_id);
  r.n = g.order();
  r.num_edges = g.num_edges();
  const auto deg = degree_stats(g);
  r.max_degree = deg.max_degree;
  r.degeneracy = degeneracy(g);
  r.connected = is_connected(g);

  if (r.n > 0) {
    const auto spec = lambda_max(g);
    r.lambda1 = spec.lambda1;
    r.lambda1_method = std::string(to_string(spec.method));
    if (r.n <= kMaxPolynomialOrder) {
      try {
        r.mu1 = mu_max_root(g);
      } catch (const LimitError&) {
      }
    }
  }
  r.spectral_source = r.mu1 ? "mu1" : "lambda1";
  const double spectral_input = r.mu1.value_or(r.lambda1);

  if (r.n <= budget.max_exact_order && g.has_masks()) {
    const auto gr = grundy_exact(g, budget.search_expansions);
    if (gr.is_exact()) {
      r.exact_grundy = gr.value;
    } else {
      r.grundy_lower = gr.value;
    }
    const auto chi = chromatic_number(g, budget.search_expansions);
    if (chi.is_exact()) r.exact_chromatic = chi.value;
  }

  auto set = [&](std::string_view name, std::optional<double> v, bool grundy = true,
                 bool heuristic = false) {
    for (std::size_t i = 0; i < kBoundNames.size(); ++i) {
      if (kBoundNames[i] == name) r.bounds[i] = BoundValue{v, grundy, heuristic};
    }
  };
  const bool nonempty = r.n > 0;
  set("maxdeg_plus_one", nonempty ? std::optional<double>(bound_maxdeg(r.max_degree)) : std::nullopt);
  set("wilf", nonempty ? std::optional<double>(bound_wilf(r.lambda1)) : std::nullopt, false);
  set("spectral_recurrence",
      nonempty ? std::optional<double>(bound_spectral_recurrence(spectral_input)) : std::nullopt);
  set("spectral_remark",
      nonempty ? std::optional<double>(bound_spectral_remark(spectral_input)) : std::nullopt);
  set("size_corollary",
      nonempty ? std::optional<double>(bound_size_corollary(r.lambda1, r.n)) : std::nullopt);
  set("edges_wu_elphick",
      nonempty ? std::optional<double>(bound_edges(r.num_edges, r.lambda1, r.n)) : std::nullopt);
  set("degeneracy_log",
      r.n >= 2 ? std::optional<double>(bound_degeneracy_log(r.degeneracy, r.n)) : std::nullopt,
      true, true);
  set("bollobas_half_density",
      r.n >= 16 ? std::optional<double>(bound_bollobas(r.n)) : std::nullopt, false);
  return r;
}

}  // namespace grundy
