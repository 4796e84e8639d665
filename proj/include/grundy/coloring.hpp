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
#include <span>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

/// Colors are 1-based; a valid Coloring uses exactly {1..num_colors}.
struct Coloring {
  std::vector<int> color;
  int num_colors = 0;
};

/// An ordering together with the first-fit coloring it produces.
struct GrundyWitness {
  std::vector<Vertex> ordering;
  Coloring coloring;
};

enum class SearchStatus {
  exact,             ///< the value is the true optimum
  budget_exhausted,  ///< the value is the best found before the budget ran out
};

struct GrundyResult {
  int value = 0;
  SearchStatus status = SearchStatus::exact;
  GrundyWitness witness;
  std::uint64_t expansions = 0;

  bool is_exact() const { return status == SearchStatus::exact; }
};

struct ChromaticResult {
  int value = 0;
  SearchStatus status = SearchStatus::exact;
  Coloring coloring;
  std::uint64_t expansions = 0;

  bool is_exact() const { return status == SearchStatus::exact; }
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// Colors ordering[i] with the smallest color missing among its neighbors
/// that appear earlier in the ordering. Throws std::invalid_argument if
/// `ordering` is not a permutation of the vertices.
Coloring first_fit(const Graph& g, std::span<const Vertex> ordering);

bool is_proper(const Graph& g, const Coloring& c);
/// Proper, gap-free, and every vertex of color c sees colors 1..c-1 among its
/// neighbors. These are exactly the colorings first-fit can produce.
bool is_grundy_coloring(const Graph& g, const Coloring& c);

/// Grundy number by trying all n! orderings (n <= 9, else LimitError).
/// Kept deliberately naive: it is the reference the exact engine is checked
/// against.
int grundy_bruteforce(const Graph& g);

/// Exact Grundy number by backtracking over partial Grundy colorings.
///
/// For each target k it looks for a vertex colored k whose color demands
/// (a neighbor of every smaller color, recursively) can be met by a proper
/// partial coloring. Any such partial coloring extends to a full first-fit
/// run, so the witness ordering lists color classes 1..k and then the rest.
/// Targets run upward from a first-fit lower bound and stop at the first
/// infeasible k or at Delta + 1. `budget` caps node expansions; on
/// exhaustion the result holds the best lower bound found so far.
/// Requires n <= 64.
GrundyResult grundy_exact(const Graph& g,
                          std::uint64_t budget = kDefaultSearchBudget);

/// Exact chromatic number by iterative deepening over k: each round is a
/// backtracking k-coloring search over vertices in largest-degree-first
/// order, with new colors opened one at a time. Requires n <= 64.
ChromaticResult chromatic_number(const Graph& g,
                                 std::uint64_t budget = kDefaultSearchBudget);

}  // namespace grundy
