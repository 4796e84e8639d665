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

#include "grundy/matching.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>
#include <unordered_map>

namespace grundy {

namespace {

using Mask = std::uint64_t;

void require_order(const Graph& g, const char* what) {
  if (g.order() > kMaxPolynomialOrder) {
    throw LimitError(std::string(what) + " supports at most " +
                     std::to_string(kMaxPolynomialOrder) + " vertices");
  }
}

// Memo table: dense for small n, hashed otherwise.
class MatchingMemo {
 public:
  MatchingMemo(int n, std::size_t limit) : limit_(limit), dense_(n <= 16) {
    if (dense_) {
      table_.resize(std::size_t{1} << n);
      known_.assign(std::size_t{1} << n, 0);
    }
  }

  const IntPolynomial* find(Mask s) const {
    if (dense_) return known_[s] ? &table_[s] : nullptr;
    auto it = map_.find(s);
    return it == map_.end() ? nullptr : &it->second;
  }

  const IntPolynomial& store(Mask s, IntPolynomial p) {
    if (++stored_ > limit_) {
      throw LimitError("matching polynomial exceeded " + std::to_string(limit_) +
                       " memoized states");
    }
    if (dense_) {
      known_[s] = 1;
      return table_[s] = std::move(p);
    }
    return map_[s] = std::move(p);
  }

 private:
  std::size_t limit_;
  std::size_t stored_ = 0;
  bool dense_;
  std::vector<IntPolynomial> table_;
  std::vector<char> known_;
  std::unordered_map<Mask, IntPolynomial> map_;
};

}  // namespace

IntPolynomial matching_polynomial(const Graph& g, std::size_t state_limit) {
  require_order(g, "matching_polynomial");
  const int n = g.order();
  std::vector<Mask> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);

  MatchingMemo memo(n, state_limit);
  const IntPolynomial one = IntPolynomial::constant(1);

  auto mu = [&](auto&& self, Mask s) -> IntPolynomial {
    if (s == 0) return one;
    if (const auto* hit = memo.find(s)) return *hit;
    const int v = std::countr_zero(s);
    const Mask rest = s & (s - 1);
    IntPolynomial result = self(self, rest).shifted(1);
    for (Mask m = adj[v] & rest; m; m &= m - 1) {
      result -= self(self, rest & ~(Mask{1} << std::countr_zero(m)));
    }
    return memo.store(s, std::move(result));
  };
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  return mu(mu, all);
}

BigPolynomial forest_matching_polynomial(const Graph& forest) {
  const int n = forest.order();
  const auto comps = connected_components(forest);
  if (forest.num_edges() + comps.size() != static_cast<std::size_t>(n)) {
    throw GraphError("forest_matching_polynomial needs an acyclic graph");
  }
  const BigPolynomial x = BigPolynomial::monomial(1, 1);
  BigPolynomial total = BigPolynomial::constant(1);

  std::vector<Vertex> parent(n, -1);
  std::vector<BigPolynomial> with_root(n);     // mu(T_v)
  std::vector<BigPolynomial> without_root(n);  // mu(T_v - v)
  for (const auto& comp : comps) {
    // Preorder from the smallest vertex; children are finished before parents
    // when walking it backwards.
    std::vector<Vertex> order{comp.front()};
    parent[comp.front()] = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Vertex w : forest.neighbors(order[i])) {
        if (w != parent[order[i]]) {
          parent[w] = order[i];
          order.push_back(w);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex v = *it;
      BigPolynomial prod = BigPolynomial::constant(1);
      BigPolynomial sum;
      for (Vertex c : forest.neighbors(v)) {
        if (c == parent[v]) continue;
        sum = sum * with_root[c] + prod * without_root[c];
        prod *= with_root[c];
        with_root[c] = {};
        without_root[c] = {};
      }
      with_root[v] = x * prod - sum;
      without_root[v] = std::move(prod);
    }
    total *= with_root[comp.front()];
  }
  return total;
}

IntPolynomial char_polynomial(const Graph& g) {
  require_order(g, "char_polynomial");
  const int n = g.order();
  std::vector<std::vector<CheckedInt>> a(n, std::vector<CheckedInt>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return IntPolynomial(berkowitz_char_poly(a));
}

std::vector<Vertex> RootedTree::path(Vertex node) const {
  std::vector<Vertex> out;
  for (Vertex v = node; v >= 0; v = parent[v]) out.push_back(endpoint[v]);
  std::reverse(out.begin(), out.end());
  return out;
}

RootedTree path_tree(const Graph& g, Vertex u, std::size_t node_limit) {
  if (u < 0 || u >= g.order()) throw GraphError("path_tree root out of range");
  RootedTree t;
  std::vector<Edge> edges;
  std::vector<char> on_path(g.order(), 0);

  auto grow = [&](auto&& self, Vertex node, Vertex end) -> void {
    on_path[end] = 1;
    for (Vertex w : g.neighbors(end)) {
      if (on_path[w]) continue;
      if (t.endpoint.size() >= node_limit) {
        throw LimitError("path tree exceeds " + std::to_string(node_limit) + " nodes");
      }
      const Vertex child = static_cast<Vertex>(t.endpoint.size());
      t.endpoint.push_back(w);
      t.parent.push_back(node);
      edges.emplace_back(node, child);
      self(self, child, w);
    }
    on_path[end] = 0;
  };
  t.endpoint.push_back(u);
  t.parent.push_back(-1);
  grow(grow, 0, u);
  t.tree = Graph(static_cast<int>(t.endpoint.size()), edges);
  t.root = 0;
  return t;
}

double mu_max_root(const Graph& g) {
  if (g.order() == 0) throw GraphError("mu_max_root needs a nonempty graph");
  if (g.num_edges() == 0) return 0.0;
  const auto coeffs = to_long_double(matching_polynomial(g));
  const long double upper = degree_stats(g).max_degree + 1;
  return static_cast<double>(largest_real_root(coeffs, 0, upper));
}

bool verify_pathtree_identity(const Graph& g, Vertex u, std::size_t node_limit) {
  const RootedTree t = path_tree(g, u, node_limit);
  const BigPolynomial mu_g = to_big(matching_polynomial(g));
  const BigPolynomial mu_g_minus_u = to_big(matching_polynomial(g.without_vertex(u)));
  const BigPolynomial mu_t = forest_matching_polynomial(t.tree);
  const BigPolynomial mu_t_minus_root =
      forest_matching_polynomial(t.tree.without_vertex(t.root));
  return mu_g * mu_t_minus_root == mu_t * mu_g_minus_u;
}

int rooted_binomial_height(const RootedTree& t) {
  const int n = t.tree.order();
  std::vector<std::vector<int>> child_heights(n);
  std::vector<int> h(n, 1);
  // Preorder numbering puts every child after its parent.
  for (Vertex v = n - 1; v >= 0; --v) {
    auto& c = child_heights[v];
    std::sort(c.begin(), c.end(), std::greater<>());
    int m = 0;
    for (int cand = 1; cand <= static_cast<int>(c.size()); ++cand) {
      bool ok = true;
      for (int i = 1; i <= cand && ok; ++i) ok = c[i - 1] >= cand - i + 1;
      if (ok) m = cand;
    }
    h[v] = 1 + m;
    if (t.parent[v] >= 0) child_heights[t.parent[v]].push_back(h[v]);
  }
  return h[t.root];
}

bool contains_binomial_tree(const RootedTree& t, int k) {
  return rooted_binomial_height(t) >= k;
}

}  // namespace grundy
