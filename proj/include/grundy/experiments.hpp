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

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

/// Invalid sweep configuration text or values.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SweepFamily {
  sparse_c_over_n,  ///< p = c / n
  density_p_of_n,   ///< p = n^(-p_exponent)
};

struct SweepConfig {
  SweepFamily family = SweepFamily::sparse_c_over_n;
  double c = 2.0;
  double p_exponent = 0.5;
  std::vector<int> n_values;
  int trials = 1;
  std::uint64_t rng_seed = 0;
  int orderings = 32;  ///< random first-fit orderings per graph
  /// Upper limit on the sum of n over all (n, trial) jobs.
  std::uint64_t max_vertex_trials = 20'000'000;

  double edge_probability(int n) const;
};

/// Parses the key-value format
///
///     # comment
///     family     = sparse_c_over_n | density_p_of_n
///     c          = 2          (sparse family)
///     p_exponent = 0.5        (density family)
///     n_values   = 1000, 10000
///     trials     = 10
///     seed       = 42
///     orderings  = 32         (optional)
///     max_vertex_trials = ... (optional)
///
/// `#` starts a comment anywhere on a line. Unknown keys, missing required
/// keys, or invalid values raise ConfigError.
SweepConfig parse_sweep_config(std::string_view text);

/// Bound columns of a sweep row, in CSV order.
inline constexpr std::array<std::string_view, 7> kSweepBoundNames = {
    "maxdeg_plus_one", "wilf",           "spectral_recurrence", "spectral_remark",
    "size_corollary",  "edges_wu_elphick", "degeneracy_log",
};

struct SweepRow {
  int n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  double lambda1 = 0;
  int max_degree = 0;
  int first_fit_lower = 0;
  std::array<double, kSweepBoundNames.size()> bounds{};
  double ref_lnn_lnlnn = 0;
  double ref_np23 = 0;

  double bound(std::string_view name) const;
  /// Smallest upper bound among the proven ones (excludes wilf, which bounds
  /// the chromatic number, and the heuristic degeneracy_log).
  double min_sound_bound() const;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool truncated = false;  ///< max_vertex_trials stopped the sweep early
};

/// Seed of the graph for (n, trial): derive_seed(rng_seed, n, trial).
std::uint64_t trial_seed(const SweepConfig& config, int n, int trial);

/// Largest first-fit color count over `orderings` uniformly shuffled
/// orderings drawn from Rng(seed).
int first_fit_lower_bound(const Graph& g, int orderings, std::uint64_t seed);

/// One row per (n, trial): G(n, p) from trial_seed, lambda1 by power
/// iteration, first-fit lower bound with orderings seeded by
/// splitmix64(trial_seed), and every bound evaluated with lambda1 standing
/// in for mu1. Jobs run on `workers` threads; rows come back in (n, trial)
/// order.
SweepResult run_sweep(const SweepConfig& config, unsigned workers = 1);

std::string sweep_csv_header();
/// Header plus one line per row. Reals use the shortest round-trip decimal
/// form, so equal rows give identical bytes.
std::string sweep_csv(const std::vector<SweepRow>& rows);
/// Throws std::runtime_error if the file cannot be written.
void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);
/// Inverse of sweep_csv. Throws std::invalid_argument on malformed input.
std::vector<SweepRow> parse_sweep_csv(std::string_view text);

}  // namespace grundy
