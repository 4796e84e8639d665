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

#include <cstdint>
#include <string_view>
#include <vector>

#include "grundy/atoms.hpp"
#include "grundy/graph.hpp"

namespace grundy {

enum class SpectralMethod { exact_poly, iterative };

std::string_view to_string(SpectralMethod m);

struct SpectralSummary {
  double lambda1 = 0;
  SpectralMethod method = SpectralMethod::exact_poly;
  /// ||A v - lambda1 v||_inf / ||v||_inf for the returned vector (iterative
  /// method only; 0 for exact_poly).
  double residual = 0;
  int iterations = 0;
};

/// Graphs up to this order use the characteristic-polynomial route.
inline constexpr int kExactSpectralOrder = 20;

/// Largest adjacency eigenvalue. Small graphs take the largest root of the
/// exact characteristic polynomial; larger ones (or ones whose polynomial
/// overflows) use power iteration.
SpectralSummary lambda_max(const Graph& g);

/// Largest root of char_polynomial(g) (n <= 30).
SpectralSummary lambda_max_exact(const Graph& g);

/// Power iteration on A + Delta*I from the all-ones vector, run on each
/// connected component. The shift makes every eigenvalue nonnegative so
/// bipartite graphs do not oscillate between +lambda1 and -lambda1. Stops
/// when the residual drops to 1e-10, or after `max_iterations` per component.
SpectralSummary lambda_max_iterative(const Graph& g, int max_iterations = 100'000);

/// f_k from f_1 = 0, f_{k+1} = (f_k + sqrt(f_k^2 + 4)) / 2, which is the
/// largest eigenvalue of the binomial tree T_k. The map is increasing with
/// slope below 1, so rounding errors do not grow; the iteration runs in long
/// double.
long double tk_lambda(int k);

/// f_1..f_{k_max} in one pass; element i holds f_{i+1}.
std::vector<long double> tk_lambda_table(int k_max);

/// B = S^T A S for an atom with layer sizes a: zero diagonal and
/// B_ij = sqrt(a_i / a_j) for i < j, symmetric.
struct QuotientMatrix {
  int k = 0;
  std::vector<double> entries;  ///< row-major k x k
  LayerSizeSequence sizes;

  double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * k + j]; }
};

/// Throws std::invalid_argument for an invalid sequence.
QuotientMatrix quotient_matrix(const LayerSizeSequence& sizes);

/// Largest eigenvalue of B through its characteristic polynomial (same
/// Berkowitz + largest-root path as small graphs, in long double).
double quotient_lambda_max(const QuotientMatrix& b);

/// 1^T B 1 / k = (2/k) sum over i < j of sqrt(a_i / a_j).
double quotient_sum(const LayerSizeSequence& sizes);

/// k sqrt(k) / (4 sqrt(n)) - 2, the lower bound on the largest eigenvalue of
/// any k-atom on n vertices.
double atom_lambda_lower(int k, int n);

}  // namespace grundy
