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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grundy {

using Vertex = int;

/// Unordered vertex pair, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Malformed graph input: self-loop, duplicate edge, out-of-range vertex.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation refused its input because a documented size or budget cap
/// would be exceeded.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Immutable after construction. Neighbor lists are sorted and stored in
/// compressed-row form; graphs with at most 64 vertices additionally carry
/// per-vertex neighbor bitmasks, which the exhaustive algorithms rely on.
class Graph {
 public:
  static constexpr int kMaskLimit = 64;

  Graph() = default;
  explicit Graph(int n);
  /// Throws GraphError on self-loops, duplicate edges or indices outside
  /// [0, n).
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  /// Sorted lexicographically, each with first < second.
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  bool has_masks() const { return n_ <= kMaskLimit; }
  /// Requires has_masks().
  std::uint64_t neighbor_mask(Vertex v) const { return masks_[v]; }

  /// Graph with v deleted; vertices above v shift down by one.
  Graph without_vertex(Vertex v) const;
  /// Subgraph induced by `keep`, relabelled in the order given.
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_ = {0};
  std::vector<Vertex> targets_;
  std::vector<std::uint64_t> masks_;
};

struct DegreeStats {
  int max_degree = 0;
  int min_degree = 0;
};

struct GraphClassTag {
  bool is_connected = false;
  bool is_tree = false;
  bool is_forest = false;
  bool is_complete = false;
  bool is_bipartite = false;
};

/// Parses the edge-list text format:
///
///     # comment (also allowed after an edge)
///     n <count>        (optional header; must precede the edges)
///     u v              (one edge per line, 0-indexed)
///
/// Without a header, n is one more than the largest index mentioned.
/// Throws GraphError with the offending line number on bad input.
Graph parse_edge_list(std::string_view text);
/// Inverse of parse_edge_list; always writes the header.
std::string to_edge_list(const Graph& g);

DegreeStats degree_stats(const Graph& g);

/// Smallest d such that every subgraph has a vertex of degree <= d.
/// Computed by min-degree peeling; ties go to the smallest vertex index.
int degeneracy(const Graph& g);
/// The peeling order used by degeneracy().
std::vector<Vertex> degeneracy_order(const Graph& g);

GraphClassTag classify(const Graph& g);
bool is_connected(const Graph& g);
/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// G(n, p) with every pair present independently with probability p.
/// Deterministic in `seed`; see rng.hpp for the exact generator.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

/// Streams every labelled connected simple graph on n vertices exactly once
/// (1 <= n <= 7). Graphs are visited in increasing order of their edge
/// bitmask, where bit b stands for the b-th pair (i, j), i < j, in
/// lexicographic order. A stream may be restricted to the masks congruent to
/// `shard` modulo `num_shards` so that workers can split the index space.
class ConnectedGraphs {
 public:
  static constexpr int kMaxOrder = 7;

  explicit ConnectedGraphs(int n, std::uint64_t shard = 0,
                           std::uint64_t num_shards = 1);

  std::optional<Graph> next();

 private:
  int n_;
  std::vector<Edge> pairs_;
  std::uint64_t mask_;
  std::uint64_t end_;
  std::uint64_t stride_;
};

/// Number of labelled connected graphs on n vertices (n <= 7), by streaming.
std::uint64_t count_connected_graphs(int n);

namespace graphs {
Graph empty(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
/// K_{1,leaves}, center is vertex 0.
Graph star(int leaves);
/// K_{a,b}; the first side is 0..a-1.
Graph complete_bipartite(int a, int b);
}  // namespace graphs

}  // namespace grundy
