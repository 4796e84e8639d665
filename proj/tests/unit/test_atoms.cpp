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

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include <gtest/gtest.h>

#include "grundy/atoms.hpp"
#include "grundy/coloring.hpp"
#include "oracles.hpp"

namespace grundy {
namespace {

LayerSizeSequence seq(std::initializer_list<int> s) { return LayerSizeSequence{s}; }

// Ordered partitions of 0..n-1 into `parts` nonempty blocks.
void for_each_ordered_partition(int n, int parts, const std::function<void(const Layers&)>& fn) {
  std::vector<int> block(n, 0);
  for (;;) {
    Layers layers(parts);
    for (int v = 0; v < n; ++v) layers[block[v]].push_back(v);
    if (std::none_of(layers.begin(), layers.end(), [](const auto& l) { return l.empty(); })) {
      fn(layers);
    }
    int i = 0;
    while (i < n && ++block[i] == parts) block[i++] = 0;
    if (i == n) return;
  }
}

TEST(BinomialTreeTest, KnownValues) {
  EXPECT_EQ(binomial_tree(1).graph, graphs::empty(1));
  EXPECT_EQ(binomial_tree(2).graph, graphs::complete(2));
  const Atom t3 = binomial_tree(3);
  EXPECT_EQ(t3.graph.order(), 4);
  EXPECT_TRUE(classify(t3.graph).is_tree);
  EXPECT_EQ(degree_stats(t3.graph).max_degree, 2);  // P4
  EXPECT_TRUE(is_atom(t3.graph, t3.layers));
  EXPECT_EQ(t3.layer_sizes(), seq({1, 1, 2}));
}

TEST(BinomialTreeTest, SizeShapeAndDoublingAgree) {
  for (int k = 1; k <= 12; ++k) {
    const Atom t = binomial_tree(k);
    EXPECT_EQ(t.graph.order(), 1 << (k - 1));
    EXPECT_TRUE(classify(t.graph).is_tree);
    EXPECT_TRUE(is_atom(t.graph, t.layers));
    EXPECT_EQ(t.seed, 0);
    // Same degree sequence as the doubling construction.
    const Graph d = oracle::binomial_tree_by_doubling(k);
    std::vector<int> a, b;
    for (Vertex v = 0; v < t.graph.order(); ++v) {
      a.push_back(t.graph.degree(v));
      b.push_back(d.degree(v));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
  EXPECT_THROW(binomial_tree(0), std::invalid_argument);
  EXPECT_THROW(binomial_tree(25), LimitError);
}

TEST(ExtendAtomTest, KnownValues) {
  const Atom k1 = binomial_tree(1);
  const Atom k2 = extend_atom(k1, std::vector<int>{0});
  EXPECT_EQ(k2.graph, graphs::complete(2));

  const Atom p4 = extend_atom(k2, std::vector<int>{0, 1});
  EXPECT_EQ(p4.graph, Graph(4, {{0, 1}, {0, 2}, {1, 3}}));
  EXPECT_TRUE(is_atom(p4.graph, p4.layers));

  const Atom k3 = extend_atom(k2, std::vector<int>{0, 0});
  EXPECT_EQ(k3.graph, graphs::complete(3));
  EXPECT_TRUE(is_atom(k3.graph, k3.layers));
  EXPECT_EQ(k3.layer_sizes(), seq({1, 1, 1}));
}

TEST(ExtendAtomTest, Rejections) {
  const Atom k2 = binomial_tree(2);
  EXPECT_THROW(extend_atom(k2, std::vector<int>{0, 2}), std::invalid_argument);
  EXPECT_THROW(extend_atom(k2, std::vector<int>{0}), std::invalid_argument);
  EXPECT_THROW(extend_atom(k2, std::vector<int>{-1, 0}), std::invalid_argument);
  const std::vector<Edge> extra = {{0, 1}};
  EXPECT_THROW(extend_atom(k2, std::vector<int>{0, 0}, extra), std::invalid_argument);
}

TEST(IsAtomTest, KnownValues) {
  EXPECT_TRUE(is_atom(graphs::complete(2), Layers{{0}, {1}}));
  int accepted = 0;
  for_each_ordered_partition(4, 3, [&](const Layers& l) { accepted += is_atom(graphs::cycle(4), l); });
  EXPECT_EQ(accepted, 0);
  const Atom t4 = binomial_tree(4);
  EXPECT_TRUE(is_atom(t4.graph, t4.layers));
}

TEST(IsAtomTest, RejectsEachBrokenRule) {
  // Layer 1 must be a single vertex.
  EXPECT_FALSE(is_atom(graphs::empty(2), Layers{{0, 1}}));
  // Not a partition.
  EXPECT_FALSE(is_atom(graphs::complete(2), Layers{{0}, {0}}));
  EXPECT_FALSE(is_atom(graphs::path(3), Layers{{0}, {1}}));
  // New layer not independent: K3 with layers {0},{1,2}.
  EXPECT_FALSE(is_atom(graphs::complete(3), Layers{{0}, {1, 2}}));
  // Old vertex with two neighbors in the next layer: star center.
  EXPECT_FALSE(is_atom(graphs::star(2), Layers{{0}, {1, 2}}));
  // New vertex with no earlier neighbor.
  EXPECT_FALSE(is_atom(Graph(3, {{0, 1}}), Layers{{0}, {1}, {2}}));
  // K2 + pendant from the second vertex only: vertex 0 has no neighbor in L3.
  EXPECT_FALSE(is_atom(Graph(3, {{0, 1}, {1, 2}}), Layers{{0}, {1}, {2}}));
}

TEST(IsAtomTest, SmallAtomsAreExactlyTheBruteForceOnes) {
  // Every graph on <= 5 vertices with every ordered layering: is_atom must
  // agree with a direct reading of the definition.
  auto direct = [](const Graph& g, const Layers& layers) {
    if (layers.empty() || layers[0].size() != 1) return false;
    std::vector<int> at(g.order(), -1);
    for (int i = 0; i < static_cast<int>(layers.size()); ++i) {
      for (Vertex v : layers[i]) at[v] = i;
    }
    for (const auto& [u, v] : g.edges()) {
      if (at[u] == at[v]) return false;
    }
    for (int i = 1; i < static_cast<int>(layers.size()); ++i) {
      for (Vertex v = 0; v < g.order(); ++v) {
        if (at[v] >= i) continue;
        int hits = 0;
        for (Vertex w : layers[i]) hits += g.adjacent(v, w);
        if (hits != 1) return false;
      }
      for (Vertex w : layers[i]) {
        bool back = false;
        for (Vertex v = 0; v < g.order(); ++v) back = back || (at[v] < i && g.adjacent(v, w));
        if (!back) return false;
      }
    }
    return true;
  };
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::all_connected(n)) {
      for (int k = 1; k <= n; ++k) {
        for_each_ordered_partition(n, k, [&](const Layers& l) {
          ASSERT_EQ(is_atom(g, l), direct(g, l));
        });
      }
    }
  }
}

TEST(EnumerateAtomsTest, KnownValues) {
  const auto a1 = enumerate_atoms(1, 12);
  ASSERT_EQ(a1.size(), 1u);
  EXPECT_EQ(a1[0].graph, graphs::empty(1));

  const auto a2 = enumerate_atoms(2, 12);
  ASSERT_EQ(a2.size(), 1u);
  EXPECT_EQ(a2[0].graph, graphs::complete(2));

  const auto a3 = enumerate_atoms(3, 4);
  ASSERT_EQ(a3.size(), 2u);
  std::vector<LayerSizeSequence> sizes;
  for (const auto& a : a3) sizes.push_back(a.layer_sizes());
  EXPECT_NE(std::find(sizes.begin(), sizes.end(), seq({1, 1, 1})), sizes.end());
  EXPECT_NE(std::find(sizes.begin(), sizes.end(), seq({1, 1, 2})), sizes.end());
  for (const auto& a : a3) {
    if (a.layer_sizes() == seq({1, 1, 1})) {
      EXPECT_EQ(a.graph, graphs::complete(3));
    }
  }

  EXPECT_THROW(enumerate_atoms(6, 12), LimitError);
  EXPECT_THROW(enumerate_atoms(3, 13), LimitError);
}

TEST(EnumerateAtomsTest, ValidDistinctAndTreeIsLargest) {
  for (int k = 1; k <= 5; ++k) {
    const int n_max = std::min(12, 1 << (k - 1));
    const auto atoms = enumerate_atoms(k, n_max);
    int trees = 0;
    int largest = 0;
    for (const auto& a : atoms) {
      ASSERT_TRUE(is_atom(a.graph, a.layers));
      ASSERT_EQ(a.level(), k);
      ASSERT_LE(a.graph.order(), n_max);
      largest = std::max(largest, a.graph.order());
      if (classify(a.graph).is_tree) {
        ++trees;
        EXPECT_EQ(a.graph.order(), 1 << (k - 1));
      }
    }
    if ((1 << (k - 1)) <= n_max) {
      EXPECT_EQ(trees, 1) << k;
      EXPECT_EQ(largest, 1 << (k - 1));
      int at_max = 0;
      for (const auto& a : atoms) at_max += a.graph.order() == largest;
      EXPECT_EQ(at_max, 1) << "T_k is the unique largest k-atom";
    }
  }
}

TEST(EnumerateAtomsTest, LayerPreservingCopiesAreMerged) {
  // Every extension of every 3-atom on <= 3 vertices, relabelled, must land
  // on one of the enumerated 4-atoms with the same layer sizes and edges
  // count; enumerating twice gives the same list.
  const auto a = enumerate_atoms(4, 8);
  const auto b = enumerate_atoms(4, 8);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].graph, b[i].graph);
  std::map<std::vector<int>, int> by_sizes;
  for (const auto& atom : a) ++by_sizes[atom.layer_sizes().sizes];
  // Only (1,1,1,1) is K4; (1,1,2,4) is T4 alone.
  EXPECT_EQ(by_sizes[(std::vector<int>{1, 1, 1, 1})], 1);
  EXPECT_EQ(by_sizes[(std::vector<int>{1, 1, 2, 4})], 1);
}

TEST(GrundyOfAtomsTest, LayerReversedOrderingWitnessesLevel) {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& a : enumerate_atoms(k, 8)) {
      std::vector<Vertex> order;
      for (int l = k - 1; l >= 0; --l) order.insert(order.end(), a.layers[l].begin(), a.layers[l].end());
      EXPECT_EQ(first_fit(a.graph, order).num_colors, k);
      EXPECT_GE(grundy_exact(a.graph).value, k);
    }
  }
}

TEST(ValidSequencesTest, KnownValues) {
  EXPECT_EQ(valid_sequences(4, 3), std::vector<LayerSizeSequence>{seq({1, 1, 2})});
  const std::vector<LayerSizeSequence> five_four = {seq({1, 1, 1, 2}), seq({1, 1, 2, 1})};
  EXPECT_EQ(valid_sequences(5, 4), five_four);
  for (int k = 1; k <= 5; ++k) {
    LayerSizeSequence t{{1}};
    for (int i = 1; i < k; ++i) t.sizes.push_back(1 << (i - 1));
    const auto all = valid_sequences(1 << (k - 1), k);
    EXPECT_NE(std::find(all.begin(), all.end(), t), all.end());
  }
  EXPECT_TRUE(valid_sequences(9, 4).empty());  // more than 2^(k-1)
}

TEST(ValidSequencesTest, MatchesCompositionFilter) {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      // All compositions of n into k parts, filtered by the prefix rule.
      std::vector<LayerSizeSequence> expected;
      std::vector<int> parts(k, 1);
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k - 1) {
          parts[i] = left;
          if (left >= 1) {
            LayerSizeSequence s{parts};
            if (s.is_valid()) expected.push_back(s);
          }
          return;
        }
        for (int v = 1; v <= left - (k - 1 - i); ++v) {
          parts[i] = v;
          rec(i + 1, left - v);
        }
      };
      rec(0, n);
      std::sort(expected.begin(), expected.end(),
                [](const auto& a, const auto& b) { return a.sizes < b.sizes; });
      EXPECT_EQ(valid_sequences(n, k), expected) << n << " " << k;
    }
  }
}

TEST(MinQuotientSumTest, KnownValues) {
  auto m = min_quotient_sum(4, 3);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->argmin, seq({1, 1, 2}));
  EXPECT_NEAR(m->value, 1 + 2 * std::sqrt(0.5), 1e-12);

  m = min_quotient_sum(5, 4);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->argmin, seq({1, 1, 1, 2}));
  EXPECT_TRUE(m->argmin.is_non_decreasing());
  // Direct evaluation of both candidates.
  const double a = 3 + 3 * std::sqrt(0.5);
  const double b = 1 + 2 * std::sqrt(0.5) + 1 + std::sqrt(2.0) + std::sqrt(2.0);
  EXPECT_NEAR(m->value, std::min(a, b), 1e-12);

  for (int k = 1; k <= 8; ++k) {
    m = min_quotient_sum(k, k);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->argmin.sizes, std::vector<int>(k, 1));
    EXPECT_NEAR(m->value, k * (k - 1) / 2.0, 1e-12);
  }
  EXPECT_FALSE(min_quotient_sum(9, 4));
}

TEST(MinQuotientSumTest, NonDecreasingMinimizerUpToFourteen) {
  for (int n = 1; n <= 14; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto m = min_quotient_sum(n, k);
      if (!m) continue;
      EXPECT_TRUE(m->argmin.is_non_decreasing()) << n << " " << k;
      for (const auto& s : valid_sequences(n, k)) EXPECT_LE(m->value, pairwise_ratio_sum(s) + 1e-12);
    }
  }
}

}  // namespace
}  // namespace grundy
