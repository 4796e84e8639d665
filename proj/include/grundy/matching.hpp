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

#include <cstddef>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/polynomial.hpp"

namespace grundy {

inline constexpr int kMaxPolynomialOrder = 30;
inline constexpr std::size_t kDefaultMatchingStates = 1u << 22;
inline constexpr std::size_t kDefaultPathTreeNodes = 1'000'000;

/// Matching polynomial sum over matchings M of (-1)^|M| x^(n - 2|M|).
///
/// Uses the deletion recurrence expanded at the lowest vertex v of the
/// current vertex set S:
///
///     mu(S) = x mu(S - v) - sum over neighbors w of v in S of mu(S - v - w)
///
/// memoized on S. Refuses graphs above kMaxPolynomialOrder vertices, more
/// than `state_limit` memo entries, or coefficients beyond 128 bits
/// (LimitError in every case).
IntPolynomial matching_polynomial(const Graph& g,
                                  std::size_t state_limit = kDefaultMatchingStates);

/// Matching polynomial of a forest of any size, by the rooted recurrence
/// mu(T_v) = x prod mu(T_c) - sum_c mu(T_c - c) prod_{c' != c} mu(T_c').
/// Arbitrary-precision coefficients. Throws GraphError if g has a cycle.
BigPolynomial forest_matching_polynomial(const Graph& forest);

/// det(xI - A) with exact integer coefficients (n <= kMaxPolynomialOrder).
IntPolynomial char_polynomial(const Graph& g);

/// Path tree of (G, u): one node per path of G starting at u, with each
/// path adjacent to its one-edge extensions. Node 0 is the root (the
/// length-0 path); nodes are numbered in depth-first order.
struct RootedTree {
  Graph tree;
  Vertex root = 0;
  std::vector<Vertex> parent;    ///< parent[root] == -1
  std::vector<Vertex> endpoint;  ///< last vertex of the node's path in G

  /// The path of G that `node` stands for, starting at the source vertex.
  std::vector<Vertex> path(Vertex node) const;
};

/// Throws LimitError if the tree would exceed `node_limit` nodes.
RootedTree path_tree(const Graph& g, Vertex u,
                     std::size_t node_limit = kDefaultPathTreeNodes);

/// Largest j such that the binomial tree T_j embeds in `t` with its root on
/// t.root. T_j splits at its root into rooted copies of T_1, ..., T_{j-1}, so
/// a node carries T_j iff its children, sorted by their own value in
/// descending order, satisfy h_(i) >= j - i for i = 1..j-1.
int rooted_binomial_height(const RootedTree& t);

/// True when T_k is a rooted subgraph of `t`.
bool contains_binomial_tree(const RootedTree& t, int k);

/// Largest root of the matching polynomial, within about 1e-12 absolute.
/// Searches [0, Delta + 1], which holds every matching root.
double mu_max_root(const Graph& g);

/// Checks mu_G * mu_{T - root} == mu_T * mu_{G - u} exactly, where T is the
/// path tree of (G, u).
bool verify_pathtree_identity(const Graph& g, Vertex u,
                              std::size_t node_limit = kDefaultPathTreeNodes);

}  // namespace grundy
