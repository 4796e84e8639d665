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

#include "grundy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "grundy/matching.hpp"
#include "grundy/polynomial.hpp"

namespace grundy {

std::string_view to_string(SpectralMethod m) {
  return m == SpectralMethod::exact_poly ? "exact_poly" : "iterative";
}

SpectralSummary lambda_max_exact(const Graph& g) {
  SpectralSummary s;
  s.method = SpectralMethod::exact_poly;
  if (g.num_edges() == 0) return s;
  const auto coeffs = to_long_double(char_polynomial(g));
  const long double upper = degree_stats(g).max_degree + 1;
  s.lambda1 = static_cast<double>(largest_real_root(coeffs, 0, upper));
  return s;
}

namespace {

struct ComponentEigen {
  double rho = 0;
  double residual = 0;
  int iterations = 0;
};

constexpr double kResidualTarget = 1e-10;

// Shifted power iteration restricted to one connected component, given as a
// sorted vertex list. Works in local indices.
ComponentEigen component_power_iteration(const Graph& g, const std::vector<Vertex>& comp,
                                         int shift, int max_iterations) {
  const int m = static_cast<int>(comp.size());
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i) {
    for (Vertex w : g.neighbors(comp[i])) {
      adj[i].push_back(static_cast<int>(std::lower_bound(comp.begin(), comp.end(), w) - comp.begin()));
    }
  }
  std::vector<double> x(m, 1.0 / std::sqrt(static_cast<double>(m)));
  std::vector<double> ax(m);
  ComponentEigen out;
  for (int it = 0;; ++it) {
    double rho = 0;
    for (int i = 0; i < m; ++i) {
      double acc = 0;
      for (int j : adj[i]) acc += x[j];
      ax[i] = acc;
      rho += x[i] * acc;  // x is unit length
    }
    double resid = 0;
    double vmax = 0;
    for (int i = 0; i < m; ++i) {
      resid = std::max(resid, std::abs(ax[i] - rho * x[i]));
      vmax = std::max(vmax, std::abs(x[i]));
    }
    out = {rho, vmax > 0 ? resid / vmax : 0, it + 1};
    if (out.residual <= kResidualTarget || it + 1 >= max_iterations) return out;
    double norm = 0;
    for (int i = 0; i < m; ++i) {
      x[i] = ax[i] + shift * x[i];
      norm += x[i] * x[i];
    }
    norm = std::sqrt(norm);
    for (double& xi : x) xi /= norm;
  }
}

}  // namespace

SpectralSummary lambda_max_iterative(const Graph& g, int max_iterations) {
  SpectralSummary s;
  s.method = SpectralMethod::iterative;
  if (g.order() == 0) return s;
  // lambda1(G) is the maximum over components. A component whose maximum
  // degree does not exceed the best value so far cannot beat it.
  struct Part {
    std::vector<Vertex> vertices;
    int max_degree = 0;
  };
  std::vector<Part> parts;
  for (auto& comp : connected_components(g)) {
    Part p{std::move(comp), 0};
    std::sort(p.vertices.begin(), p.vertices.end());
    for (Vertex v : p.vertices) p.max_degree = std::max(p.max_degree, g.degree(v));
    parts.push_back(std::move(p));
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Part& a, const Part& b) { return a.max_degree > b.max_degree; });
  bool first = true;
  for (const Part& p : parts) {
    if (!first && p.max_degree <= s.lambda1) break;
    const auto e = component_power_iteration(g, p.vertices, std::max(1, p.max_degree), max_iterations);
    s.iterations += e.iterations;
    if (first || e.rho > s.lambda1) {
      s.lambda1 = e.rho;
      s.residual = e.residual;
    }
    first = false;
  }
  return s;
}

SpectralSummary lambda_max(const Graph& g) {
  if (g.order() <= kExactSpectralOrder) {
    try {
      return lambda_max_exact(g);
    } catch (const OverflowError&) {
    }
  }
  return lambda_max_iterative(g);
}

long double tk_lambda(int k) {
  if (k < 1) throw std::invalid_argument("tk_lambda needs k >= 1");
  long double f = 0;
  for (int i = 1; i < k; ++i) f = (f + std::sqrt(f * f + 4)) / 2;
  return f;
}

std::vector<long double> tk_lambda_table(int k_max) {
  std::vector<long double> out;
  if (k_max < 1) return out;
  out.reserve(k_max);
  long double f = 0;
  out.push_back(f);
  for (int i = 1; i < k_max; ++i) {
    f = (f + std::sqrt(f * f + 4)) / 2;
    out.push_back(f);
  }
  return out;
}

QuotientMatrix quotient_matrix(const LayerSizeSequence& sizes) {
  if (!sizes.is_valid()) throw std::invalid_argument("invalid layer-size sequence");
  QuotientMatrix b;
  b.k = sizes.levels();
  b.sizes = sizes;
  b.entries.assign(static_cast<std::size_t>(b.k) * b.k, 0.0);
  for (int i = 0; i < b.k; ++i) {
    for (int j = i + 1; j < b.k; ++j) {
      const double v = std::sqrt(static_cast<double>(sizes.sizes[i]) / sizes.sizes[j]);
      b.entries[static_cast<std::size_t>(i) * b.k + j] = v;
      b.entries[static_cast<std::size_t>(j) * b.k + i] = v;
    }
  }
  return b;
}

double quotient_lambda_max(const QuotientMatrix& b) {
  std::vector<std::vector<long double>> a(b.k, std::vector<long double>(b.k));
  long double row_bound = 0;
  for (int i = 0; i < b.k; ++i) {
    long double row = 0;
    for (int j = 0; j < b.k; ++j) {
      a[i][j] = b.at(i, j);
      row += std::fabs(a[i][j]);
    }
    row_bound = std::max(row_bound, row);
  }
  const auto coeffs = berkowitz_char_poly(a);
  return static_cast<double>(largest_real_root(coeffs, 0, row_bound + 1));
}

double quotient_sum(const LayerSizeSequence& sizes) {
  if (!sizes.is_valid()) throw std::invalid_argument("invalid layer-size sequence");
  return 2.0 / sizes.levels() * pairwise_ratio_sum(sizes);
}

double atom_lambda_lower(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("atom_lambda_lower needs k, n >= 1");
  return k * std::sqrt(static_cast<double>(k)) / (4 * std::sqrt(static_cast<double>(n))) - 2;
}

}  // namespace grundy
