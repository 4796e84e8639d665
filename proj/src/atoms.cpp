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

#include "grundy/atoms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace grundy {

int LayerSizeSequence::total() const {
  return std::accumulate(sizes.begin(), sizes.end(), 0);
}

bool LayerSizeSequence::is_valid() const {
  if (sizes.empty() || sizes.front() != 1) return false;
  long long prefix = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) return false;
    if (i > 0 && sizes[i] > prefix) return false;
    prefix += sizes[i];
  }
  return true;
}

bool LayerSizeSequence::is_non_decreasing() const {
  return std::is_sorted(sizes.begin(), sizes.end());
}

LayerSizeSequence Atom::layer_sizes() const {
  LayerSizeSequence s;
  for (const auto& layer : layers) s.sizes.push_back(static_cast<int>(layer.size()));
  return s;
}

Atom extend_atom(const Atom& atom, std::span<const int> assignment,
                 std::span<const Edge> extra_edges) {
  if (!extra_edges.empty()) {
    throw std::invalid_argument(
        "extra edges are not allowed: each old vertex gets exactly one new neighbor");
  }
  const int n = atom.graph.order();
  if (static_cast<int>(assignment.size()) != n) {
    throw std::invalid_argument("assignment must cover every existing vertex");
  }
  const int added = n ? *std::max_element(assignment.begin(), assignment.end()) + 1 : 0;
  std::vector<char> hit(added, 0);
  for (int a : assignment) {
    if (a < 0) throw std::invalid_argument("negative new-vertex index");
    hit[a] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
    throw std::invalid_argument("assignment is not surjective onto the new layer");
  }

  std::vector<Edge> edges = atom.graph.edges();
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, n + assignment[v]);
  Atom out;
  out.graph = Graph(n + added, edges);
  out.layers = atom.layers;
  out.layers.emplace_back(added);
  std::iota(out.layers.back().begin(), out.layers.back().end(), n);
  out.seed = atom.seed;
  return out;
}

Atom binomial_tree(int k) {
  if (k < 1) throw std::invalid_argument("binomial_tree needs k >= 1");
  if (k > kMaxBinomialLevel) {
    throw LimitError("binomial_tree supports k <= " + std::to_string(kMaxBinomialLevel));
  }
  Atom t{Graph(1), {{0}}, 0};
  for (int step = 2; step <= k; ++step) {
    std::vector<int> identity(t.graph.order());
    std::iota(identity.begin(), identity.end(), 0);
    t = extend_atom(t, identity);
  }
  return t;
}

bool is_atom(const Graph& g, const Layers& layers) {
  const int n = g.order();
  if (layers.empty() || layers.front().size() != 1) return false;
  std::vector<int> level(n, -1);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i].empty()) return false;
    for (Vertex v : layers[i]) {
      if (v < 0 || v >= n || level[v] >= 0) return false;
      level[v] = static_cast<int>(i);
    }
  }
  if (std::find(level.begin(), level.end(), -1) != level.end()) return false;

  for (auto [u, v] : g.edges()) {
    if (level[u] == level[v]) return false;
  }
  // count[v][j]: neighbors of v in layer j.
  std::vector<std::vector<int>> count(n, std::vector<int>(layers.size(), 0));
  for (auto [u, v] : g.edges()) {
    ++count[u][level[v]];
    ++count[v][level[u]];
  }
  for (Vertex v = 0; v < n; ++v) {
    int earlier = 0;
    for (int j = 0; j < level[v]; ++j) earlier += count[v][j];
    if (level[v] > 0 && earlier == 0) return false;
    for (std::size_t j = level[v] + 1; j < layers.size(); ++j) {
      if (count[v][j] != 1) return false;
    }
  }
  return true;
}

namespace {

using Code = std::vector<std::uint32_t>;

// Lexicographically smallest encoding over layer-preserving relabellings.
// The encoding lists the layer sizes, then for each vertex in label order the
// bitmask of its earlier-labelled neighbors. For a fixed relabelling of the
// non-final layers, sorting the final layer's masks is optimal, so only the
// non-final layers are permuted.
Code canonical_code(const Atom& atom) {
  const int n = atom.graph.order();
  const auto& layers = atom.layers;
  const std::size_t last = layers.size() - 1;
  std::vector<std::vector<Vertex>> perm(layers.begin(), layers.end() - 1);
  for (auto& layer : perm) std::sort(layer.begin(), layer.end());

  Code best;
  std::vector<int> label(n, -1);
  auto evaluate = [&] {
    int next = 0;
    for (const auto& layer : perm) {
      for (Vertex v : layer) label[v] = next++;
    }
    Code code;
    for (const auto& layer : layers) code.push_back(static_cast<std::uint32_t>(layer.size()));
    for (const auto& layer : perm) {
      for (Vertex v : layer) {
        std::uint32_t mask = 0;
        for (Vertex w : atom.graph.neighbors(v)) {
          if (label[w] >= 0 && label[w] < label[v]) mask |= 1u << label[w];
        }
        code.push_back(mask);
      }
    }
    std::vector<std::uint32_t> tail;
    for (Vertex v : layers[last]) {
      std::uint32_t mask = 0;
      for (Vertex w : atom.graph.neighbors(v)) mask |= 1u << label[w];
      tail.push_back(mask);
    }
    std::sort(tail.begin(), tail.end());
    code.insert(code.end(), tail.begin(), tail.end());
    if (best.empty() || code < best) best = std::move(code);
  };

  auto permute = [&](auto&& self, std::size_t layer) -> void {
    if (layer == perm.size()) {
      evaluate();
      return;
    }
    std::sort(perm[layer].begin(), perm[layer].end());
    do {
      self(self, layer + 1);
    } while (std::next_permutation(perm[layer].begin(), perm[layer].end()));
  };
  permute(permute, 0);
  return best;
}

// Calls fn(assignment) for every set partition of {0..n-1} into exactly
// `blocks` blocks, as restricted growth strings.
template <class Fn>
void for_each_partition(int n, int blocks, Fn&& fn) {
  std::vector<int> a(n, 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (n - i < blocks - used) return;
    if (i == n) {
      if (used == blocks) fn(a);
      return;
    }
    for (int b = 0; b <= std::min(used, blocks - 1); ++b) {
      a[i] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) return;
  rec(rec, 0, 0);
}

}  // namespace

std::vector<Atom> enumerate_atoms(int k, int n_max) {
  if (k < 1) throw std::invalid_argument("enumerate_atoms needs k >= 1");
  if (k > kMaxEnumerationLevel || n_max > kMaxEnumerationOrder) {
    throw LimitError("enumerate_atoms supports k <= " + std::to_string(kMaxEnumerationLevel) +
                     " and n_max <= " + std::to_string(kMaxEnumerationOrder));
  }
  std::vector<Atom> level;
  if (n_max >= 1) level.push_back(Atom{Graph(1), {{0}}, 0});
  for (int step = 2; step <= k; ++step) {
    std::map<Code, Atom> next;
    for (const Atom& atom : level) {
      const int n = atom.graph.order();
      for (int added = 1; added <= std::min(n, n_max - n); ++added) {
        for_each_partition(n, added, [&](const std::vector<int>& assignment) {
          Atom grown = extend_atom(atom, assignment);
          Code code = canonical_code(grown);
          next.try_emplace(std::move(code), std::move(grown));
        });
      }
    }
    level.clear();
    for (auto& [code, atom] : next) level.push_back(std::move(atom));
  }
  return level;
}

std::vector<LayerSizeSequence> valid_sequences(int n, int k) {
  std::vector<LayerSizeSequence> out;
  if (n < 1 || k < 1 || k > n) return out;
  std::vector<int> seq{1};
  auto rec = [&](auto&& self, int prefix) -> void {
    const int slots = k - static_cast<int>(seq.size());
    const int remaining = n - prefix;
    if (slots == 0) {
      if (remaining == 0) out.push_back({seq});
      return;
    }
    for (int a = 1; a <= std::min(prefix, remaining - (slots - 1)); ++a) {
      seq.push_back(a);
      self(self, prefix + a);
      seq.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

double pairwise_ratio_sum(const LayerSizeSequence& seq) {
  double sum = 0;
  const auto& a = seq.sizes;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      sum += std::sqrt(static_cast<double>(a[i]) / a[j]);
    }
  }
  return sum;
}

std::optional<QuotientSumMinimum> min_quotient_sum(int n, int k) {
  std::optional<QuotientSumMinimum> best;
  for (auto& seq : valid_sequences(n, k)) {
    const double value = pairwise_ratio_sum(seq);
    if (!best || value < best->value) best = QuotientSumMinimum{value, std::move(seq)};
  }
  return best;
}

}  // namespace grundy
