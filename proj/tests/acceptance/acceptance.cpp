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

// Acceptance checks. Prints one PASS/FAIL line per criterion.
//
//     acceptance                  run all criteria
//     acceptance --criterion N    run criterion N only (exit 1 on FAIL)

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "grundy/atoms.hpp"
#include "grundy/bounds.hpp"
#include "grundy/coloring.hpp"
#include "grundy/experiments.hpp"
#include "grundy/graph.hpp"
#include "grundy/matching.hpp"
#include "grundy/parallel.hpp"
#include "grundy/rng.hpp"
#include "grundy/spectral.hpp"
#include "oracles.hpp"

namespace {

using namespace grundy;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = false;
  std::string detail;
};

// Counts checks and keeps the first few failures for the report.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checked_;
    if (ok) return;
    if (failures_.size() < 3) failures_.push_back(what());
    ++failed_;
  }
  std::size_t checked() const { return checked_; }
  Outcome outcome(std::string extra = {}) const {
    std::ostringstream os;
    os << checked_ << " checks";
    if (!extra.empty()) os << "; " << extra;
    if (failed_ > 0) {
      os << "; " << failed_ << " failed, e.g.";
      for (const auto& f : failures_) os << " [" << f << "]";
    }
    return {failed_ == 0, os.str()};
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string describe(const Graph& g) {
  std::string s = to_edge_list(g);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

template <class Fn>
void for_each_connected(int max_n, Fn&& fn) {
  for (int n = 1; n <= max_n; ++n) {
    ConnectedGraphs corpus(n);
    while (auto g = corpus.next()) fn(*g);
  }
}

bool time_ok(Clock::time_point start, double limit_s, std::string& detail) {
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream os;
  os << "; " << s << " s (limit " << limit_s << " s)";
  detail += os.str();
  return s < limit_s;
}

// 1. Sandwich 0 <= sqrt(2(k-1)) - f_k for 2 <= k <= 1e6, with a shrinking gap.
Outcome criterion1() {
  const auto start = Clock::now();
  const auto f = tk_lambda_table(1'000'000);
  Tally t;
  auto gap = [&](int k) { return std::sqrt(2.0L * (k - 1)) - f[k - 1]; };
  for (int k = 2; k <= 1'000'000; ++k) {
    const long double g = gap(k);
    t.check(g >= 0, [&] { return "k=" + std::to_string(k); });
  }
  t.check(gap(1'000'000) < gap(1000), [] { return "gap(1e6) >= gap(1e3)"; });
  std::ostringstream extra;
  extra << "gap(1e3)=" << static_cast<double>(gap(1000))
        << " gap(1e6)=" << static_cast<double>(gap(1'000'000));
  Outcome o = t.outcome(extra.str());
  o.passed = time_ok(start, 1.0, o.detail) && o.passed;
  return o;
}

// 2. |f_k - lambda1(T_k)| < 1e-7 for k <= 12 with the iterative eigensolver.
Outcome criterion2() {
  const auto start = Clock::now();
  Tally t;
  double worst = 0;
  for (int k = 1; k <= 12; ++k) {
    const Atom tk = binomial_tree(k);
    const auto s = lambda_max_iterative(tk.graph);
    const double err = std::abs(static_cast<double>(tk_lambda(k)) - s.lambda1);
    worst = std::max(worst, err);
    t.check(err < 1e-7, [&] { return "k=" + std::to_string(k) + " err=" + std::to_string(err); });
    t.check(s.residual <= 1e-8, [&] { return "k=" + std::to_string(k) + " residual"; });
  }
  std::ostringstream extra;
  extra << "max |f_k - lambda1| = " << worst;
  Outcome o = t.outcome(extra.str());
  o.passed = time_ok(start, 10.0, o.detail) && o.passed;
  return o;
}

Graph random_connected(int n, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Graph g = erdos_renyi(n, 0.45, derive_seed(seed, attempt, 0));
    if (is_connected(g)) return g;
  }
}

// 3. Exact path-tree identity, all connected n <= 6 and every root, plus 500
// random connected graphs on 7 vertices.
Outcome criterion3() {
  const auto start = Clock::now();
  Tally t;
  auto check_all_roots = [&](const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u) {
      t.check(verify_pathtree_identity(g, u),
              [&] { return describe(g) + " root " + std::to_string(u); });
    }
  };
  for_each_connected(6, check_all_roots);
  const std::size_t corpus_checks = t.checked();
  for (std::uint64_t i = 0; i < 500; ++i) check_all_roots(random_connected(7, derive_seed(3, i, 7)));
  Outcome o = t.outcome(std::to_string(corpus_checks) + " from the n <= 6 corpus");
  o.passed = time_ok(start, 300.0, o.detail) && o.passed;
  return o;
}

// 4. mu_G = phi_G exactly on every tree n <= 9, and differs on every
// connected non-tree n <= 6.
Outcome criterion4() {
  const auto start = Clock::now();
  Tally t;
  std::size_t trees = 0;
  auto compare = [&](const Graph& g) {
    ++trees;
    t.check(matching_polynomial(g) == char_polynomial(g), [&] { return describe(g); });
  };
  compare(graphs::empty(1));
  for (int n = 2; n <= 9; ++n) oracle::for_each_tree(n, compare);
  std::size_t non_trees = 0;
  for_each_connected(6, [&](const Graph& g) {
    if (g.num_edges() + 1 == static_cast<std::size_t>(g.order())) return;
    ++non_trees;
    t.check(matching_polynomial(g) != char_polynomial(g), [&] { return describe(g); });
  });
  Outcome o = t.outcome(std::to_string(trees) + " labeled trees, " + std::to_string(non_trees) +
                        " non-trees");
  o.passed = time_ok(start, 120.0, o.detail) && o.passed;
  return o;
}

std::vector<Atom> all_atoms() {
  std::vector<Atom> out;
  for (int k = 1; k <= kMaxEnumerationLevel; ++k) {
    auto a = enumerate_atoms(k, kMaxEnumerationOrder);
    out.insert(out.end(), std::make_move_iterator(a.begin()), std::make_move_iterator(a.end()));
  }
  return out;
}

// 5. lambda1 >= mu1 - 1e-8 >= f_k - 1e-8 on every k-atom (k <= 5, n <= 12),
// and mu1 = f_k only for T_k.
Outcome criterion5() {
  const auto start = Clock::now();
  Tally t;
  const auto atoms = all_atoms();
  std::size_t tight = 0;
  for (const Atom& a : atoms) {
    const int k = a.level();
    const double lambda = lambda_max(a.graph).lambda1;
    const double mu = mu_max_root(a.graph);
    const double fk = static_cast<double>(tk_lambda(k));
    t.check(lambda >= mu - 1e-8, [&] { return "lambda < mu on " + describe(a.graph); });
    t.check(mu >= fk - 1e-8, [&] { return "mu < f_k on " + describe(a.graph); });
    const bool equal = std::abs(mu - fk) <= 1e-8;
    const bool is_tk = a.graph.order() == (1 << (k - 1)) && classify(a.graph).is_tree;
    tight += equal;
    t.check(equal == is_tk, [&] { return "equality case on " + describe(a.graph); });
  }
  Outcome o = t.outcome(std::to_string(atoms.size()) + " atoms, " + std::to_string(tight) +
                        " with mu1 = f_k");
  o.passed = time_ok(start, 300.0, o.detail) && o.passed;
  return o;
}

// 6. grundy_exact = grundy_bruteforce on every connected graph n <= 7, plus
// the T_k and K_{m,n} values.
Outcome criterion6() {
  const auto start = Clock::now();
  Tally t;
  for_each_connected(7, [&](const Graph& g) {
    const auto r = grundy_exact(g);
    t.check(r.is_exact() && r.value == grundy_bruteforce(g), [&] { return describe(g); });
  });
  for (int k = 1; k <= 5; ++k) {
    t.check(grundy_exact(binomial_tree(k).graph).value == k, [&] { return "T_" + std::to_string(k); });
  }
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      t.check(grundy_exact(graphs::complete_bipartite(a, b)).value == 2,
              [&] { return "K_" + std::to_string(a) + "," + std::to_string(b); });
    }
  }
  Outcome o = t.outcome();
  o.passed = time_ok(start, 600.0, o.detail) && o.passed;
  return o;
}

// 7. Exact Grundy number below every applicable bound on connected n <= 7;
// tightness on T_k and K_n.
Outcome criterion7() {
  const auto start = Clock::now();
  Tally t;
  for_each_connected(7, [&](const Graph& g) {
    const BoundReport r = bound_report(g);
    if (!r.exact_grundy) {
      t.check(false, [&] { return "no exact value for " + describe(g); });
      return;
    }
    const int gamma = *r.exact_grundy;
    for (std::size_t i = 0; i < kBoundNames.size(); ++i) {
      const BoundValue& b = r.bounds[i];
      if (!b.value || !b.bounds_grundy) continue;
      t.check(gamma <= *b.value + 1e-9,
              [&] { return std::string(kBoundNames[i]) + " on " + describe(g); });
    }
    t.check(*r.exact_chromatic <= *r.bound("wilf").value + 1e-8,
            [&] { return "wilf on " + describe(g); });
  });
  for (int k = 1; k <= 5; ++k) {
    const BoundReport r = bound_report(binomial_tree(k).graph);
    t.check(*r.bound("spectral_recurrence").value == k && *r.exact_grundy == k,
            [&] { return "spectral_recurrence not tight on T_" + std::to_string(k); });
  }
  for (int n = 2; n <= 8; ++n) {
    const BoundReport r = bound_report(graphs::complete(n));
    t.check(std::abs(*r.bound("edges_wu_elphick").value - n) < 1e-9 && *r.exact_grundy == n,
            [&] { return "edges bound not tight on K_" + std::to_string(n); });
  }
  Outcome o = t.outcome();
  o.passed = time_ok(start, 600.0, o.detail) && o.passed;
  return o;
}

// 8. lambda1(A) >= lambda1(B) - 1e-8 >= 1^T B 1 / k - 1e-8 and
// lambda1(A) >= k sqrt(k) / (4 sqrt(n)) - 2 - 1e-8 on every enumerated atom.
Outcome criterion8() {
  const auto start = Clock::now();
  Tally t;
  const auto atoms = all_atoms();
  for (const Atom& a : atoms) {
    const auto sizes = a.layer_sizes();
    const double lg = lambda_max(a.graph).lambda1;
    const double lb = quotient_lambda_max(quotient_matrix(sizes));
    t.check(lg >= lb - 1e-8, [&] { return "lambda(A) < lambda(B) on " + describe(a.graph); });
    t.check(lb >= quotient_sum(sizes) - 1e-8, [&] { return "lambda(B) < sum on " + describe(a.graph); });
    t.check(lg >= atom_lambda_lower(a.level(), a.graph.order()) - 1e-8,
            [&] { return "atom lower bound on " + describe(a.graph); });
  }
  Outcome o = t.outcome(std::to_string(atoms.size()) + " atoms");
  o.passed = time_ok(start, 60.0, o.detail) && o.passed;
  return o;
}

// 9. For every valid (n, k) with n <= 14 the minimum of sum sqrt(a_i/a_j)
// over valid sequences is attained by a non-decreasing one.
Outcome criterion9() {
  const auto start = Clock::now();
  Tally t;
  int pairs = 0;
  for (int n = 1; n <= 14; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto all = valid_sequences(n, k);
      if (all.empty()) continue;
      ++pairs;
      double best = INFINITY;
      double best_sorted = INFINITY;
      for (const auto& s : all) {
        double v = 0;
        for (int i = 0; i < k; ++i) {
          for (int j = i + 1; j < k; ++j) v += std::sqrt(static_cast<double>(s.sizes[i]) / s.sizes[j]);
        }
        best = std::min(best, v);
        if (std::is_sorted(s.sizes.begin(), s.sizes.end())) best_sorted = std::min(best_sorted, v);
      }
      const auto m = min_quotient_sum(n, k);
      const std::string where = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
      t.check(best_sorted <= best + 1e-12, [&] { return where + " minimum not non-decreasing"; });
      t.check(m && m->argmin.is_non_decreasing() && std::abs(m->value - best) <= 1e-12,
              [&] { return where + " argmin"; });
    }
  }
  Outcome o = t.outcome(std::to_string(pairs) + " (n,k) pairs");
  o.passed = time_ok(start, 60.0, o.detail) && o.passed;
  return o;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

// 10. Sparse random graphs, c = 2, seed 42, n in {1e3, 1e4, 1e5}, 10 trials.
Outcome criterion10() {
  const auto start = Clock::now();
  SweepConfig cfg;
  cfg.family = SweepFamily::sparse_c_over_n;
  cfg.c = 2;
  cfg.n_values = {1000, 10000, 100000};
  cfg.trials = 10;
  cfg.rng_seed = 42;
  const SweepResult result = run_sweep(cfg, default_workers());

  std::ostringstream os;
  bool ok = !result.truncated;
  int within_all = 0;
  int trials_all = 0;
  std::vector<double> medians;
  int below_maxdeg_1e5 = 0;
  int trials_1e5 = 0;
  for (int n : cfg.n_values) {
    int within = 0;
    int trials = 0;
    std::vector<double> ratios;
    for (const SweepRow& row : result.rows) {
      if (row.n != n) continue;
      ++trials;
      const double np = n * cfg.edge_probability(n);
      const double ref = std::max(std::sqrt(static_cast<double>(row.max_degree)), np);
      within += row.lambda1 >= 0.75 * ref && row.lambda1 <= 1.25 * ref;
      const double spectral = row.bound("spectral_recurrence");
      ratios.push_back(spectral / row.ref_lnn_lnlnn);
      if (n == 100000) {
        ++trials_1e5;
        below_maxdeg_1e5 += spectral < row.max_degree + 1;
      }
    }
    ok = ok && trials == cfg.trials;
    within_all += within;
    trials_all += trials;
    medians.push_back(median(ratios));
    os << "n=" << n << ": lambda1 in band " << within << "/" << trials << ", median ratio "
       << medians.back() << "; ";
  }
  // (a) pools the trials of all three orders; (c) names its order.
  const bool a_ok = 10 * within_all >= 8 * trials_all;
  const bool b_ok = std::is_sorted(medians.rbegin(), medians.rend());
  const bool c_ok = trials_1e5 == cfg.trials && 10 * below_maxdeg_1e5 >= 9 * trials_1e5;
  os << "(a) " << within_all << "/" << trials_all << " " << (a_ok ? "pass" : "fail") << ", (b) "
     << (b_ok ? "pass" : "fail") << ", (c) "
     << below_maxdeg_1e5 << "/" << trials_1e5 << " " << (c_ok ? "pass" : "fail");
  Outcome o{ok && a_ok && b_ok && c_ok, os.str()};
  o.passed = time_ok(start, 300.0, o.detail) && o.passed;
  return o;
}

std::string capture(const std::string& args, int& code) {
  const std::string cmd = std::string(GRUNDY_CLI_PATH) + " " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    code = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

// 11. Byte-identical sweep and tk output across two runs.
Outcome criterion11() {
  namespace fs = std::filesystem;
  const fs::path cfg = fs::temp_directory_path() / "grundy_acceptance_sweep.cfg";
  std::ofstream(cfg) << "family = sparse_c_over_n\nc = 2\nn_values = 100, 1000, 5000\n"
                        "trials = 3\nseed = 42\n";
  int c1 = 0, c2 = 0, c3 = 0, c4 = 0;
  const std::string s1 = capture("sweep " + cfg.string(), c1);
  const std::string s2 = capture("sweep --workers 1 " + cfg.string(), c2);
  const std::string t1 = capture("tk --k-max 100000", c3);
  const std::string t2 = capture("tk --k-max 100000", c4);
  fs::remove(cfg);
  const bool codes = c1 == 0 && c2 == 0 && c3 == 0 && c4 == 0;
  const bool same = s1 == s2 && t1 == t2 && !s1.empty() && !t1.empty();
  std::ostringstream os;
  os << "sweep " << s1.size() << " bytes " << (s1 == s2 ? "identical" : "DIFFER") << ", tk "
     << t1.size() << " bytes " << (t1 == t2 ? "identical" : "DIFFER");
  if (!codes) os << "; nonzero exit code";
  return {codes && same, os.str()};
}

const std::array<std::function<Outcome()>, 11> kCriteria = {
    criterion1, criterion2, criterion3, criterion4,  criterion5, criterion6,
    criterion7, criterion8, criterion9, criterion10, criterion11,
};

bool run(int n) {
  Outcome o;
  try {
    o = kCriteria[n - 1]();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::cout << "criterion " << n << ": " << (o.passed ? "PASS" : "FAIL") << " (" << o.detail << ")"
            << std::endl;
  return o.passed;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::string(argv[1]) == "--criterion") {
    const int n = std::atoi(argv[2]);
    if (n < 1 || n > static_cast<int>(kCriteria.size())) {
      std::cerr << "criterion must be 1.." << kCriteria.size() << "\n";
      return 2;
    }
    return run(n) ? 0 : 1;
  }
  if (argc != 1) {
    std::cerr << "usage: acceptance [--criterion N]\n";
    return 2;
  }
  bool all = true;
  for (int n = 1; n <= static_cast<int>(kCriteria.size()); ++n) all = run(n) && all;
  return all ? 0 : 1;
}
