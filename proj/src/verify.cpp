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

#include "grundy/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "grundy/atoms.hpp"
#include "grundy/bounds.hpp"
#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"
#include "grundy/matching.hpp"
#include "grundy/parallel.hpp"
#include "grundy/spectral.hpp"

namespace grundy {

bool SuiteResult::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

namespace {

constexpr double kSlack = 1e-8;

constexpr std::array<std::string_view, 10> kSuites = {
    "pathtree-identity", "forest-mu-phi", "matching-roots", "grundy-engines",
    "bounds-soundness",  "atoms-chain",   "interlacing",    "sorted-minimizer",
    "tk-sandwich",       "lambda-endpoints",
};

std::string describe(const Graph& g) {
  std::string s = "n=" + std::to_string(g.order()) + " edges=[";
  for (const auto& [u, v] : g.edges()) {
    s += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  }
  return s + "]";
}

// Thread-safe property accumulator.
class Check {
 public:
  explicit Check(std::string name) { r_.property = std::move(name); }

  void record(bool ok, const std::function<std::string()>& what) {
    std::lock_guard lock(mu_);
    ++r_.checked;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = what();
    }
  }

  PropertyResult result() const {
    std::lock_guard lock(mu_);
    return r_;
  }

 private:
  mutable std::mutex mu_;
  PropertyResult r_;
};

void for_each_connected(int max_n, unsigned workers,
                        const std::function<void(const Graph&)>& fn) {
  if (max_n > ConnectedGraphs::kMaxOrder) {
    throw std::invalid_argument("max_n must be at most " +
                                std::to_string(ConnectedGraphs::kMaxOrder));
  }
  for (int n = 1; n <= max_n; ++n) {
    const std::size_t shards = std::max(1u, workers) * 4;
    parallel_for(shards, workers, [&](std::size_t shard) {
      ConnectedGraphs gen(n, shard, shards);
      while (auto g = gen.next()) fn(*g);
    });
  }
}

std::vector<Atom> all_atoms(int max_n) {
  const int n_max = std::min(kMaxEnumerationOrder, 2 * max_n);
  std::vector<Atom> out;
  for (int k = 1; k <= kMaxEnumerationLevel; ++k) {
    auto atoms = enumerate_atoms(k, n_max);
    out.insert(out.end(), std::make_move_iterator(atoms.begin()),
               std::make_move_iterator(atoms.end()));
  }
  return out;
}

// Largest matching root with disconnected graphs allowed.
double mu1_any(const Graph& g) {
  if (g.order() == 0) return 0;
  return mu_max_root(g);
}

SuiteResult finish(std::string_view name, std::initializer_list<const Check*> checks) {
  SuiteResult s;
  s.suite = std::string(name);
  for (const Check* c : checks) s.properties.push_back(c->result());
  return s;
}

SuiteResult pathtree_identity(const VerifyOptions& o) {
  Check identity("mu_G * mu_{T-root} == mu_T * mu_{G-u}");
  for_each_connected(o.max_n, o.workers, [&](const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u) {
      identity.record(verify_pathtree_identity(g, u),
                      [&] { return describe(g) + " u=" + std::to_string(u); });
    }
  });
  return finish("pathtree-identity", {&identity});
}

SuiteResult forest_mu_phi(const VerifyOptions& o) {
  Check trees("tree: mu == phi");
  Check others("connected non-tree: mu != phi");
  Check forest_dp("tree: forest DP == edge recursion");
  for_each_connected(o.max_n, o.workers, [&](const Graph& g) {
    const auto mu = matching_polynomial(g);
    const auto phi = char_polynomial(g);
    if (classify(g).is_tree) {
      trees.record(mu == phi, [&] { return describe(g); });
      forest_dp.record(forest_matching_polynomial(g) == to_big(mu), [&] { return describe(g); });
    } else {
      others.record(!(mu == phi), [&] { return describe(g); });
    }
  });
  return finish("forest-mu-phi", {&trees, &others, &forest_dp});
}

SuiteResult matching_roots(const VerifyOptions& o) {
  Check order("mu1 <= lambda1 + 1e-8");
  Check equality("mu1 == lambda1 iff tree");
  Check transfer("mu1(G) == lambda1(T(G,u))");
  Check strict("proper subgraph has smaller mu1");
  for_each_connected(o.max_n, o.workers, [&](const Graph& g) {
    const double mu1 = mu_max_root(g);
    const double lambda1 = lambda_max(g).lambda1;
    order.record(mu1 <= lambda1 + kSlack, [&] { return describe(g); });
    const bool tie = std::abs(mu1 - lambda1) < kSlack;
    equality.record(tie == classify(g).is_tree, [&] { return describe(g); });
    for (Vertex u = 0; u < g.order(); ++u) {
      const auto t = path_tree(g, u);
      const double lt = lambda_max(t.tree).lambda1;
      transfer.record(std::abs(mu1 - lt) < kSlack, [&] {
        return describe(g) + " u=" + std::to_string(u) + " lambda1(T)=" + std::to_string(lt);
      });
    }
    if (g.order() < 2) return;
    // Every proper subgraph lies inside some G - e or G - v.
    for (const auto& e : g.edges()) {
      std::vector<Edge> rest;
      for (const auto& f : g.edges()) {
        if (f != e) rest.push_back(f);
      }
      const Graph h(g.order(), rest);
      strict.record(mu1_any(h) + 1e-10 < mu1, [&] { return describe(g) + " minus edge"; });
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      strict.record(mu1_any(g.without_vertex(v)) + 1e-10 < mu1,
                    [&] { return describe(g) + " minus vertex " + std::to_string(v); });
    }
  });
  return finish("matching-roots", {&order, &equality, &transfer, &strict});
}

SuiteResult grundy_engines(const VerifyOptions& o) {
  Check agree("grundy_exact == grundy_bruteforce");
  Check witness("witness ordering reproduces the value");
  Check families("Gamma(T_k) = k, Gamma(K_{a,b}) = 2");
  for_each_connected(o.max_n, o.workers, [&](const Graph& g) {
    const auto exact = grundy_exact(g);
    const int brute = grundy_bruteforce(g);
    agree.record(exact.is_exact() && exact.value == brute, [&] {
      return describe(g) + " exact=" + std::to_string(exact.value) +
             " brute=" + std::to_string(brute);
    });
    const auto c = first_fit(g, exact.witness.ordering);
    witness.record(c.num_colors == exact.value && is_grundy_coloring(g, c),
                   [&] { return describe(g); });
  });
  for (int k = 1; k <= 5; ++k) {
    const int v = grundy_exact(binomial_tree(k).graph).value;
    families.record(v == k, [&] { return "T_" + std::to_string(k) + " gave " + std::to_string(v); });
  }
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const int v = grundy_exact(graphs::complete_bipartite(a, b)).value;
      families.record(v == 2, [&] {
        return "K_{" + std::to_string(a) + "," + std::to_string(b) + "} gave " + std::to_string(v);
      });
    }
  }
  return finish("grundy-engines", {&agree, &witness, &families});
}

SuiteResult bounds_soundness(const VerifyOptions& o) {
  Check sound("Gamma <= every Grundy bound");
  Check wilf("chi <= 1 + lambda1");
  Check tight_tk("spectral_recurrence == Gamma on T_k");
  Check tight_kn("edges bound == Gamma == n on K_n");
  for_each_connected(o.max_n, o.workers, [&](const Graph& g) {
    const auto r = bound_report(g);
    if (!r.exact_grundy) {
      sound.record(false, [&] { return describe(g) + " exact search gave up"; });
      return;
    }
    const int gamma = *r.exact_grundy;
    for (std::size_t i = 0; i < kBoundNames.size(); ++i) {
      const auto& b = r.bounds[i];
      if (!b.value || !b.bounds_grundy) continue;
      sound.record(gamma <= *b.value + kSlack, [&] {
        return describe(g) + " " + std::string(kBoundNames[i]) + "=" + std::to_string(*b.value) +
               " < Gamma=" + std::to_string(gamma);
      });
    }
    if (r.exact_chromatic) {
      wilf.record(*r.exact_chromatic <= r.lambda1 + 1 + kSlack, [&] { return describe(g); });
    }
  });
  for (int k = 1; k <= 5; ++k) {
    const auto r = bound_report(binomial_tree(k).graph);
    tight_tk.record(r.exact_grundy == k && r.bound("spectral_recurrence").value == k,
                    [&] { return "T_" + std::to_string(k); });
  }
  for (int n = 2; n <= 8; ++n) {
    const auto r = bound_report(graphs::complete(n));
    const double e = r.bound("edges_wu_elphick").value.value_or(-1);
    tight_kn.record(r.exact_grundy == n && std::abs(e - n) < kSlack,
                    [&] { return "K_" + std::to_string(n); });
  }
  return finish("bounds-soundness", {&sound, &wilf, &tight_tk, &tight_kn});
}

SuiteResult atoms_chain(const VerifyOptions& o) {
  Check valid("is_atom");
  Check grundy("Gamma(A_k) >= k via layer-reversed witness");
  Check chain("lambda1 >= mu1 >= f_k");
  Check tk_equality("mu1 == f_k iff A_k == T_k");
  Check embed("T_k embeds in path_tree(A_k, seed); equal iff A_k == T_k");
  const auto atoms = all_atoms(o.max_n);
  parallel_for(atoms.size(), o.workers, [&](std::size_t i) {
    const Atom& a = atoms[i];
    const Graph& g = a.graph;
    const int k = a.level();
    valid.record(is_atom(g, a.layers), [&] { return describe(g); });

    std::vector<Vertex> order;
    for (int l = k - 1; l >= 0; --l) order.insert(order.end(), a.layers[l].begin(), a.layers[l].end());
    const int ff = first_fit(g, order).num_colors;
    grundy.record(ff >= k && grundy_exact(g).value >= k, [&] { return describe(g); });

    const double lambda1 = lambda_max(g).lambda1;
    const double mu1 = mu_max_root(g);
    const double fk = static_cast<double>(tk_lambda(k));
    chain.record(lambda1 >= mu1 - kSlack && mu1 >= fk - kSlack, [&] {
      return describe(g) + " lambda1=" + std::to_string(lambda1) + " mu1=" + std::to_string(mu1);
    });
    const bool is_tk = classify(g).is_tree;
    tk_equality.record((std::abs(mu1 - fk) < kSlack) == is_tk, [&] { return describe(g); });

    const auto t = path_tree(g, a.seed);
    const bool same_size = t.tree.order() == (1 << (k - 1));
    embed.record(contains_binomial_tree(t, k) && same_size == is_tk,
                 [&] { return describe(g); });
  });
  return finish("atoms-chain", {&valid, &grundy, &chain, &tk_equality, &embed});
}

SuiteResult interlacing(const VerifyOptions& o) {
  Check quotient("B == S^T A S");
  Check chain("lambda1(A) >= lambda1(B) >= quotient_sum");
  Check atom_lower("lambda1 >= k sqrt(k) / (4 sqrt(n)) - 2");
  const auto atoms = all_atoms(o.max_n);
  parallel_for(atoms.size(), o.workers, [&](std::size_t i) {
    const Atom& a = atoms[i];
    const Graph& g = a.graph;
    const int k = a.level();
    const auto sizes = a.layer_sizes();
    const auto b = quotient_matrix(sizes);

    std::vector<int> layer_of(g.order());
    for (int l = 0; l < k; ++l) {
      for (Vertex v : a.layers[l]) layer_of[v] = l;
    }
    std::vector<double> sab(static_cast<std::size_t>(k) * k, 0.0);
    for (const auto& [u, v] : g.edges()) {
      const int lu = layer_of[u];
      const int lv = layer_of[v];
      const double w = 1.0 / std::sqrt(static_cast<double>(sizes.sizes[lu]) * sizes.sizes[lv]);
      sab[static_cast<std::size_t>(lu) * k + lv] += w;
      sab[static_cast<std::size_t>(lv) * k + lu] += w;
    }
    double err = 0;
    for (std::size_t e = 0; e < sab.size(); ++e) err = std::max(err, std::abs(sab[e] - b.entries[e]));
    quotient.record(err < 1e-12, [&] { return describe(g); });

    const double lambda1 = lambda_max(g).lambda1;
    const double lb = quotient_lambda_max(b);
    const double qs = quotient_sum(sizes);
    chain.record(lambda1 >= lb - kSlack && lb >= qs - kSlack, [&] { return describe(g); });
    atom_lower.record(lambda1 >= atom_lambda_lower(k, g.order()) - kSlack,
                   [&] { return describe(g); });
  });
  return finish("interlacing", {&quotient, &chain, &atom_lower});
}

SuiteResult sorted_minimizer(const VerifyOptions&) {
  Check sorted("argmin of the ratio sum is non-decreasing (n <= 14)");
  for (int n = 1; n <= 14; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto m = min_quotient_sum(n, k);
      if (!m) continue;
      sorted.record(m->argmin.is_non_decreasing(),
                    [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  }
  return finish("sorted-minimizer", {&sorted});
}

SuiteResult tk_sandwich(const VerifyOptions&) {
  Check gap("0 <= sqrt(2(k-1)) - f_k for k <= 10^6");
  Check vanishing("gap(10^6) < gap(10^3)");
  Check recurrence("|f_k - lambda1(T_k)| < 1e-7 for k <= 12");
  constexpr int kMax = 1'000'000;
  const auto f = tk_lambda_table(kMax);
  auto gap_at = [&](int k) { return std::sqrt(2.0L * (k - 1)) - f[k - 1]; };
  for (int k = 1; k <= kMax; ++k) {
    gap.record(gap_at(k) >= 0, [&] { return "k=" + std::to_string(k); });
  }
  vanishing.record(gap_at(kMax) < gap_at(1000), [] { return std::string("gap grew"); });
  for (int k = 1; k <= 12; ++k) {
    const double l = lambda_max(binomial_tree(k).graph).lambda1;
    recurrence.record(std::abs(static_cast<double>(f[k - 1]) - l) < 1e-7,
                      [&] { return "k=" + std::to_string(k); });
  }
  return finish("tk-sandwich", {&gap, &vanishing, &recurrence});
}

SuiteResult lambda_endpoints(const VerifyOptions& o) {
  Check range("sqrt(Delta) <= lambda1 <= Delta");
  Check left("lambda1 == sqrt(Delta) iff star");
  Check right("lambda1 == Delta iff regular");
  for_each_connected(o.max_n, o.workers, [&](const Graph& g) {
    const auto d = degree_stats(g);
    const double l = lambda_max(g).lambda1;
    const double root = std::sqrt(static_cast<double>(d.max_degree));
    range.record(root <= l + kSlack && l <= d.max_degree + kSlack, [&] { return describe(g); });
    const bool star = classify(g).is_tree && d.max_degree == g.order() - 1;
    left.record((std::abs(l - root) < kSlack) == star, [&] { return describe(g); });
    const bool regular = d.max_degree == d.min_degree;
    right.record((std::abs(l - d.max_degree) < kSlack) == regular, [&] { return describe(g); });
  });
  return finish("lambda-endpoints", {&range, &left, &right});
}

}  // namespace

std::span<const std::string_view> verify_suite_names() { return kSuites; }

SuiteResult run_verify_suite(std::string_view name, const VerifyOptions& options) {
  using Fn = SuiteResult (*)(const VerifyOptions&);
  static const std::map<std::string_view, Fn> table = {
      {"pathtree-identity", pathtree_identity}, {"forest-mu-phi", forest_mu_phi},
      {"matching-roots", matching_roots},       {"grundy-engines", grundy_engines},
      {"bounds-soundness", bounds_soundness},   {"atoms-chain", atoms_chain},
      {"interlacing", interlacing},             {"sorted-minimizer", sorted_minimizer},
      {"tk-sandwich", tk_sandwich},             {"lambda-endpoints", lambda_endpoints},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw std::out_of_range("unknown suite '" + std::string(name) + "'");
  return it->second(options);
}

}  // namespace grundy
