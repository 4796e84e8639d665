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

#include <optional>
#include <span>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

using Layers = std::vector<std::vector<Vertex>>;

/// Layer sizes a_1..a_k of an atom construction.
struct LayerSizeSequence {
  std::vector<int> sizes;

  int levels() const { return static_cast<int>(sizes.size()); }
  int total() const;
  /// a_1 = 1, every a_i >= 1 and a_{i+1} <= a_1 + ... + a_i.
  bool is_valid() const;
  bool is_non_decreasing() const;

  friend bool operator==(const LayerSizeSequence&, const LayerSizeSequence&) = default;
};

/// A k-atom together with the layers of its construction.
///
/// Layer 1 is {seed}; every later layer is independent; each vertex of the
/// earlier layers has exactly one neighbor in the next layer, and each vertex
/// of a layer has at least one neighbor in the earlier layers. No other edges
/// exist. Atoms built here number their vertices layer by layer.
struct Atom {
  Graph graph;
  Layers layers;
  Vertex seed = 0;

  int level() const { return static_cast<int>(layers.size()); }
  LayerSizeSequence layer_sizes() const;
};

inline constexpr int kMaxBinomialLevel = 24;
inline constexpr int kMaxEnumerationLevel = 5;
inline constexpr int kMaxEnumerationOrder = 12;

/// The unique tree k-atom T_k (2^(k-1) vertices), built by matching a fresh
/// independent copy onto every vertex at each step. Vertex i + 2^(j-1) is
/// the leaf attached to vertex i in step j.
Atom binomial_tree(int k);

/// Adds a new independent layer: old vertex v becomes adjacent to new vertex
/// `assignment[v]`. New vertices are numbered 0..m-1 in `assignment` and must
/// all be hit. `extra_edges` must be empty (only the exactly-one-edge atom
/// variant is supported). Throws std::invalid_argument otherwise.
Atom extend_atom(const Atom& atom, std::span<const int> assignment,
                 std::span<const Edge> extra_edges = {});

/// True iff `layers` partitions V(g) and (g, layers) meets every atom
/// invariant with layers[0] as the seed layer.
bool is_atom(const Graph& g, const Layers& layers);

/// All k-atoms with at most n_max vertices, one per class of layer-preserving
/// relabellings. Caps: k <= 5 and n_max <= 12 (LimitError beyond).
/// Output order is deterministic: by level-by-level construction, then by
/// canonical form.
std::vector<Atom> enumerate_atoms(int k, int n_max);

/// Every layer-size sequence of length k summing to n.
std::vector<LayerSizeSequence> valid_sequences(int n, int k);

struct QuotientSumMinimum {
  double value = 0;  ///< sum over i < j of sqrt(a_i / a_j)
  LayerSizeSequence argmin;
};

/// sum over i < j of sqrt(a_i / a_j).
double pairwise_ratio_sum(const LayerSizeSequence& seq);

/// Exhaustive minimum of pairwise_ratio_sum over valid_sequences(n, k);
/// nullopt when there is no valid sequence. Ties keep the lexicographically
/// smallest sequence.
std::optional<QuotientSumMinimum> min_quotient_sum(int n, int k);

}  // namespace grundy
