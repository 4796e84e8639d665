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

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

namespace oracle {

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

Poly from_ints(std::initializer_list<long> coefficients) {
  Poly p;
  for (long c : coefficients) p.emplace_back(c);
  trim(p);
  return p;
}

Poly matching_poly_by_subsets(const Graph& g) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  if (m > 24) throw std::invalid_argument("too many edges for subset enumeration");
  const int n = g.order();
  Poly p(n + 1, 0);
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    std::vector<char> used(n, 0);
    bool matching = true;
    int size = 0;
    for (std::size_t e = 0; e < m && matching; ++e) {
      if (!(s >> e & 1)) continue;
      auto [u, v] = edges[e];
      if (used[u] || used[v]) matching = false;
      used[u] = used[v] = 1;
      ++size;
    }
    if (!matching) continue;
    p[n - 2 * size] += size % 2 ? -1 : 1;
  }
  trim(p);
  return p;
}

Poly char_poly_by_permutations(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw std::invalid_argument("too many vertices for permutation expansion");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly total;
  do {
    // Sign from the inversion count.
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Poly term = from_ints({inversions % 2 ? -1 : 1});
    for (int i = 0; i < n && !term.empty(); ++i) {
      const long a = g.adjacent(i, perm[i]) ? 1 : 0;
      // entry of xI - A at (i, perm[i])
      const Poly entry = perm[i] == i ? from_ints({-a, 1}) : from_ints({-a});
      term = poly_mul(term, entry);
    }
    if (total.size() < term.size()) total.resize(term.size(), 0);
    for (std::size_t i = 0; i < term.size(); ++i) total[i] += term[i];
  } while (std::next_permutation(perm.begin(), perm.end()));
  trim(total);
  if (n == 0) total = from_ints({1});
  return total;
}

double lambda_max_dense(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

void for_each_tree(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 2) throw std::invalid_argument("for_each_tree needs n >= 2");
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<Edge> edges;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
      --degree[leaf];
      --degree[x];
    }
    int a = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) {
        if (a < 0) {
          a = v;
        } else {
          edges.emplace_back(a, v);
        }
      }
    }
    fn(Graph(n, edges));
    int i = 0;
    while (i < n - 2 && ++seq[i] == n) seq[i++] = 0;
    if (i == n - 2) break;
  }
}

std::vector<Graph> all_trees(int n) {
  std::vector<Graph> out;
  for_each_tree(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

namespace {

bool connected_by_dfs(int n, const std::vector<Edge>& edges) {
  if (n == 0) return true;
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace

std::vector<Graph> all_connected(int n) {
  if (n > 6) throw std::invalid_argument("all_connected needs n <= 6");
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint32_t s = 0; s < (1u << pairs.size()); ++s) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (s >> e & 1) edges.push_back(pairs[e]);
    }
    if (connected_by_dfs(n, edges)) out.emplace_back(n, edges);
  }
  return out;
}

std::uint64_t connected_count(int n) {
  std::vector<mpz_class> c(n + 1, 0);
  auto all = [](int k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k) * (k - 1) / 2);
    return r;
  };
  auto binom = [](int a, int b) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return r;
  };
  for (int m = 1; m <= n; ++m) {
    c[m] = all(m);
    for (int k = 1; k < m; ++k) c[m] -= binom(m - 1, k - 1) * c[k] * all(m - k);
  }
  return c[n].get_ui();
}

int degeneracy_by_subsets(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int min_deg = n;
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      int d = 0;
      for (int w = 0; w < n; ++w) d += (s >> w & 1) && g.adjacent(v, w);
      min_deg = std::min(min_deg, d);
    }
    best = std::max(best, min_deg);
  }
  return best;
}

int grundy_by_permutations(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = 0;
  do {
    std::vector<int> color(n, 0);
    int used = 0;
    for (int v : perm) {
      int c = 1;
      for (bool clash = true; clash; ) {
        clash = false;
        for (int w = 0; w < n; ++w) {
          if (color[w] == c && g.adjacent(v, w)) {
            clash = true;
            ++c;
            break;
          }
        }
      }
      color[v] = c;
      used = std::max(used, c);
    }
    best = std::max(best, used);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int chromatic_by_enumeration(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> color(n, 0);
    for (;;) {
      bool proper = true;
      for (const auto& [u, v] : g.edges()) proper = proper && color[u] != color[v];
      if (proper) return k;
      int i = 0;
      while (i < n && ++color[i] == k) color[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

std::uint64_t count_paths_from(const Graph& g, Vertex u) {
  std::vector<char> on(g.order(), 0);
  std::function<std::uint64_t(Vertex)> walk = [&](Vertex v) -> std::uint64_t {
    on[v] = 1;
    std::uint64_t total = 1;
    for (Vertex w = 0; w < g.order(); ++w) {
      if (!on[w] && g.adjacent(v, w)) total += walk(w);
    }
    on[v] = 0;
    return total;
  };
  return walk(u);
}

Graph binomial_tree_by_doubling(int k) {
  std::vector<Edge> edges;
  int n = 1;
  for (int i = 2; i <= k; ++i) {
    const std::size_t m = edges.size();
    for (std::size_t e = 0; e < m; ++e) edges.emplace_back(edges[e].first + n, edges[e].second + n);
    edges.emplace_back(0, n);
    n *= 2;
  }
  return Graph(n, edges);
}

double largest_root(const Poly& p) {
  const int d = static_cast<int>(p.size()) - 1;
  if (d < 1) throw std::invalid_argument("largest_root needs degree >= 1");
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  const double lead = p[d].get_d();
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -p[i].get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  double best = -1e300;
  for (int i = 0; i < d; ++i) {
    const auto z = es.eigenvalues()[i];
    if (std::abs(z.imag()) < 1e-6) best = std::max(best, z.real());
  }
  return best;
}

}  // namespace oracle
