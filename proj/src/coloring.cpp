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

#include "grundy/coloring.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace grundy {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

void require_masks(const Graph& g, const char* what) {
  if (!g.has_masks()) {
    throw LimitError(std::string(what) + " supports at most " +
                     std::to_string(Graph::kMaskLimit) + " vertices");
  }
}

struct BudgetExhausted {};

}  // namespace

Coloring first_fit(const Graph& g, std::span<const Vertex> ordering) {
  const int n = g.order();
  if (static_cast<int>(ordering.size()) != n) {
    throw std::invalid_argument("ordering length differs from vertex count");
  }
  Coloring out;
  out.color.assign(n, 0);
  // stamp[c] == i + 1 marks color c as taken for the i-th vertex.
  std::vector<int> stamp(n + 2, 0);
  for (int i = 0; i < n; ++i) {
    const Vertex v = ordering[i];
    if (v < 0 || v >= n || out.color[v] != 0) {
      throw std::invalid_argument("ordering is not a permutation");
    }
    for (Vertex w : g.neighbors(v)) {
      if (out.color[w] != 0) stamp[out.color[w]] = i + 1;
    }
    int c = 1;
    while (stamp[c] == i + 1) ++c;
    out.color[v] = c;
    out.num_colors = std::max(out.num_colors, c);
  }
  return out;
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.order()) return false;
  for (auto [u, v] : g.edges()) {
    if (c.color[u] == c.color[v]) return false;
  }
  std::vector<char> used(c.num_colors + 1, 0);
  for (int col : c.color) {
    if (col < 1 || col > c.num_colors) return false;
    used[col] = 1;
  }
  return std::all_of(used.begin() + 1, used.end(), [](char u) { return u; });
}

bool is_grundy_coloring(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) return false;
  std::vector<char> seen(c.num_colors + 1);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Vertex w : g.neighbors(v)) seen[c.color[w]] = 1;
    for (int lower = 1; lower < c.color[v]; ++lower) {
      if (!seen[lower]) return false;
    }
  }
  return true;
}

int grundy_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > 9) throw LimitError("grundy_bruteforce supports at most 9 vertices");
  if (n == 0) return 0;

  std::uint32_t adj[9] = {};
  for (Vertex v = 0; v < n; ++v) adj[v] = static_cast<std::uint32_t>(g.neighbor_mask(v));
  const int ceiling = degree_stats(g).max_degree + 1;
  const std::uint32_t full = (1u << n) - 1;
  std::uint32_t color_bit[9] = {};
  int best = 0;

  // Depth-first over orderings; each prefix's coloring is shared by all of
  // its completions. Stops once Delta + 1 is seen, since no ordering can
  // exceed it.
  auto dfs = [&](auto&& self, std::uint32_t used, int top) -> bool {
    if (used == full) {
      best = std::max(best, top);
      return best == ceiling;
    }
    for (std::uint32_t free = full & ~used; free; free &= free - 1) {
      const int v = std::countr_zero(free);
      std::uint32_t forbidden = 0;
      for (std::uint32_t m = adj[v] & used; m; m &= m - 1) {
        forbidden |= color_bit[std::countr_zero(m)];
      }
      const int c = std::countr_one(forbidden);
      color_bit[v] = 1u << c;
      if (self(self, used | (1u << v), std::max(top, c + 1))) return true;
    }
    return false;
  };
  dfs(dfs, 0, 0);
  return best;
}

namespace {

class GrundySearch {
 public:
  GrundySearch(const Graph& g, std::uint64_t budget)
      : n_(g.order()), adj_(n_), deg_(n_), budget_(budget) {
    for (Vertex v = 0; v < n_; ++v) {
      adj_[v] = g.neighbor_mask(v);
      deg_[v] = g.degree(v);
    }
  }

  std::uint64_t expansions() const { return expansions_; }

  /// Searches for a partial Grundy coloring that uses color k. On success
  /// returns the per-vertex colors (0 = left for first-fit to decide).
  /// Throws BudgetExhausted.
  std::optional<std::vector<int>> find(int k) {
    color_.assign(n_, 0);
    classes_.assign(k + 1, 0);
    colored_ = 0;
    for (Vertex r = 0; r < n_; ++r) {
      if (deg_[r] < k - 1) continue;
      assign(r, k);
      if (solve()) return color_;
      unassign(r);
    }
    return std::nullopt;
  }

 private:
  void assign(Vertex v, int c) {
    color_[v] = c;
    classes_[c] |= bit(v);
    colored_ |= bit(v);
  }
  void unassign(Vertex v) {
    classes_[color_[v]] &= ~bit(v);
    colored_ &= ~bit(v);
    color_[v] = 0;
  }

  bool solve() {
    if (++expansions_ > budget_) throw BudgetExhausted{};

    // Pick the unmet demand (vertex v lacks a neighbor of color c) with the
    // fewest ways to meet it.
    int best_color = -1;
    Mask best_options = 0;
    int best_count = INT_MAX;
    for (Mask m = colored_; m; m &= m - 1) {
      const Vertex v = std::countr_zero(m);
      const Mask open = adj_[v] & ~colored_;
      int missing = 0;
      for (int c = 1; c < color_[v]; ++c) {
        if (adj_[v] & classes_[c]) continue;
        ++missing;
        Mask options = 0;
        for (Mask o = open; o; o &= o - 1) {
          const Vertex w = std::countr_zero(o);
          if (deg_[w] >= c - 1 && !(adj_[w] & classes_[c])) options |= bit(w);
        }
        const int count = std::popcount(options);
        if (count == 0) return false;
        if (count < best_count) {
          best_count = count;
          best_color = c;
          best_options = options;
        }
      }
      // Each uncolored neighbor can supply at most one missing color.
      if (missing > std::popcount(open)) return false;
    }
    if (best_color < 0) return true;

    for (Mask o = best_options; o; o &= o - 1) {
      const Vertex w = std::countr_zero(o);
      assign(w, best_color);
      if (solve()) return true;
      unassign(w);
    }
    return false;
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<int> deg_;
  std::vector<int> color_;
  std::vector<Mask> classes_;
  Mask colored_ = 0;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
};

GrundyWitness witness_from_partial(const Graph& g, const std::vector<int>& partial) {
  const int n = g.order();
  const int top = n ? *std::max_element(partial.begin(), partial.end()) : 0;
  GrundyWitness w;
  for (int c = 1; c <= top; ++c) {
    for (Vertex v = 0; v < n; ++v) {
      if (partial[v] == c) w.ordering.push_back(v);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (partial[v] == 0) w.ordering.push_back(v);
  }
  w.coloring = first_fit(g, w.ordering);
  return w;
}

GrundyWitness witness_from_ordering(const Graph& g, std::vector<Vertex> ordering) {
  GrundyWitness w;
  w.coloring = first_fit(g, ordering);
  w.ordering = std::move(ordering);
  return w;
}

}  // namespace

GrundyResult grundy_exact(const Graph& g, std::uint64_t budget) {
  require_masks(g, "grundy_exact");
  const int n = g.order();
  GrundyResult result;
  if (n == 0) return result;

  // Cheap first-fit lower bounds: index order and largest-degree-first.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  result.witness = witness_from_ordering(g, order);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  if (auto alt = witness_from_ordering(g, order);
      alt.coloring.num_colors > result.witness.coloring.num_colors) {
    result.witness = std::move(alt);
  }
  result.value = result.witness.coloring.num_colors;

  const int ceiling = degree_stats(g).max_degree + 1;
  GrundySearch search(g, budget);
  try {
    while (result.value < ceiling) {
      auto partial = search.find(result.value + 1);
      if (!partial) break;
      result.witness = witness_from_partial(g, *partial);
      result.value = result.witness.coloring.num_colors;
    }
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::budget_exhausted;
  }
  result.expansions = search.expansions();
  return result;
}

ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget) {
  require_masks(g, "chromatic_number");
  const int n = g.order();
  ChromaticResult result;
  if (n == 0) return result;

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  std::vector<int> color(n, 0);
  std::vector<Mask> classes;
  std::uint64_t expansions = 0;

  auto dfs = [&](auto&& self, int i, int used, int k) -> bool {
    if (++expansions > budget) throw BudgetExhausted{};
    if (i == n) return true;
    const Vertex v = order[i];
    const Mask nb = g.neighbor_mask(v);
    for (int c = 1; c <= std::min(k, used + 1); ++c) {
      if (classes[c] & nb) continue;
      color[v] = c;
      classes[c] |= bit(v);
      if (self(self, i + 1, std::max(used, c), k)) return true;
      classes[c] &= ~bit(v);
    }
    color[v] = 0;
    return false;
  };

  // Greedy in the same order gives the fallback upper bound.
  const Coloring greedy = first_fit(g, order);
  result.coloring = greedy;
  result.value = greedy.num_colors;
  try {
    for (int k = g.num_edges() ? 2 : 1; k < greedy.num_colors; ++k) {
      classes.assign(k + 1, 0);
      std::fill(color.begin(), color.end(), 0);
      if (dfs(dfs, 0, 0, k)) {
        result.coloring.color = color;
        result.coloring.num_colors = *std::max_element(color.begin(), color.end());
        result.value = result.coloring.num_colors;
        break;
      }
    }
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::budget_exhausted;
  }
  result.expansions = expansions;
  return result;
}

}  // namespace grundy
