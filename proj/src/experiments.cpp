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

#include "grundy/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>

#include "grundy/bounds.hpp"
#include "grundy/coloring.hpp"
#include "grundy/parallel.hpp"
#include "grundy/rng.hpp"
#include "grundy/spectral.hpp"

namespace grundy {

double SweepConfig::edge_probability(int n) const {
  const double p = family == SweepFamily::sparse_c_over_n
                       ? c / n
                       : std::pow(static_cast<double>(n), -p_exponent);
  return std::clamp(p, 0.0, 1.0);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("bad value for '" + std::string(key) + "': '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

SweepConfig parse_sweep_config(std::string_view text) {
  SweepConfig cfg;
  std::map<std::string, std::string, std::less<>> kv;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto raw = text.substr(0, nl);
    const auto line = trim(raw.substr(0, raw.find('#')));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (!kv.emplace(key, std::string(trim(line.substr(eq + 1)))).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
  }

  static const std::vector<std::string_view> known = {
      "family", "c", "p_exponent", "n_values", "trials", "seed", "orderings", "max_vertex_trials"};
  for (const auto& [key, value] : kv) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  for (std::string_view required : {"family", "n_values", "trials", "seed"}) {
    if (!kv.contains(required)) throw ConfigError("missing key '" + std::string(required) + "'");
  }

  const auto& family = kv.find("family")->second;
  if (family == "sparse_c_over_n") {
    cfg.family = SweepFamily::sparse_c_over_n;
    if (!kv.contains("c")) throw ConfigError("sparse_c_over_n needs 'c'");
    cfg.c = parse_number<double>("c", kv.find("c")->second);
    if (!(cfg.c > 0)) throw ConfigError("c must be positive");
  } else if (family == "density_p_of_n") {
    cfg.family = SweepFamily::density_p_of_n;
    if (!kv.contains("p_exponent")) throw ConfigError("density_p_of_n needs 'p_exponent'");
    cfg.p_exponent = parse_number<double>("p_exponent", kv.find("p_exponent")->second);
    if (!(cfg.p_exponent >= 0)) throw ConfigError("p_exponent must be nonnegative");
  } else {
    throw ConfigError("unknown family '" + family + "'");
  }

  std::string_view list = kv.find("n_values")->second;
  while (!trim(list).empty()) {
    const auto comma = list.find(',');
    const auto item = trim(list.substr(0, comma));
    const int n = parse_number<int>("n_values", item);
    if (n < 1) throw ConfigError("n_values must be positive");
    if (!cfg.n_values.empty() && n <= cfg.n_values.back()) {
      throw ConfigError("n_values must be strictly ascending");
    }
    cfg.n_values.push_back(n);
    if (comma == std::string_view::npos) break;
    list = list.substr(comma + 1);
  }

  cfg.trials = parse_number<int>("trials", kv.find("trials")->second);
  if (cfg.trials < 1) throw ConfigError("trials must be at least 1");
  cfg.rng_seed = parse_number<std::uint64_t>("seed", kv.find("seed")->second);
  if (auto it = kv.find("orderings"); it != kv.end()) {
    cfg.orderings = parse_number<int>("orderings", it->second);
    if (cfg.orderings < 1) throw ConfigError("orderings must be at least 1");
  }
  if (auto it = kv.find("max_vertex_trials"); it != kv.end()) {
    cfg.max_vertex_trials = parse_number<std::uint64_t>("max_vertex_trials", it->second);
  }
  return cfg;
}

double SweepRow::bound(std::string_view name) const {
  for (std::size_t i = 0; i < kSweepBoundNames.size(); ++i) {
    if (kSweepBoundNames[i] == name) return bounds[i];
  }
  throw std::out_of_range("unknown bound " + std::string(name));
}

double SweepRow::min_sound_bound() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < kSweepBoundNames.size(); ++i) {
    if (kSweepBoundNames[i] == "wilf" || kSweepBoundNames[i] == "degeneracy_log") continue;
    best = std::min(best, bounds[i]);
  }
  return best;
}

std::uint64_t trial_seed(const SweepConfig& config, int n, int trial) {
  return derive_seed(config.rng_seed, static_cast<std::uint64_t>(n),
                     static_cast<std::uint64_t>(trial));
}

int first_fit_lower_bound(const Graph& g, int orderings, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vertex> order(g.order());
  int best = 0;
  for (int r = 0; r < orderings; ++r) {
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span<Vertex>(order));
    best = std::max(best, first_fit(g, order).num_colors);
  }
  return best;
}

SweepResult run_sweep(const SweepConfig& config, unsigned workers) {
  struct Job {
    int n;
    int trial;
  };
  std::vector<Job> jobs;
  SweepResult result;
  std::uint64_t spent = 0;
  for (int n : config.n_values) {
    for (int t = 0; t < config.trials; ++t) {
      spent += static_cast<std::uint64_t>(n);
      if (spent > config.max_vertex_trials) {
        result.truncated = true;
        break;
      }
      jobs.push_back({n, t});
    }
    if (result.truncated) break;
  }

  result.rows.resize(jobs.size());
  parallel_for(jobs.size(), workers, [&](std::size_t i) {
    const auto [n, t] = jobs[i];
    SweepRow& row = result.rows[i];
    row.n = n;
    row.trial = t;
    row.seed = trial_seed(config, n, t);
    const double p = config.edge_probability(n);
    const Graph g = erdos_renyi(n, p, row.seed);
    const auto spectral = lambda_max_iterative(g);
    row.lambda1 = spectral.lambda1;
    row.max_degree = degree_stats(g).max_degree;
    row.first_fit_lower = first_fit_lower_bound(g, config.orderings, splitmix64(row.seed));
    const double lambda = std::max(0.0, row.lambda1);
    row.bounds = {
        static_cast<double>(bound_maxdeg(row.max_degree)),
        bound_wilf(lambda),
        static_cast<double>(bound_spectral_recurrence(lambda)),
        bound_spectral_remark(lambda),
        bound_size_corollary(lambda, n),
        bound_edges(g.num_edges(), lambda, n),
        n >= 2 ? bound_degeneracy_log(degeneracy(g), n)
               : std::numeric_limits<double>::quiet_NaN(),
    };
    const double ln = std::log(static_cast<double>(n));
    row.ref_lnn_lnlnn = n >= 3 ? ln / std::log(ln) : std::numeric_limits<double>::quiet_NaN();
    row.ref_np23 = n * std::pow(p, 2.0 / 3.0);
  });
  return result;
}

namespace {

void append_real(std::string& out, double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

template <class T>
void append_int(std::string& out, T v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

}  // namespace

std::string sweep_csv_header() {
  std::string h = "n,trial,seed,lambda1,max_degree,first_fit_lower";
  for (auto name : kSweepBoundNames) {
    h += ',';
    h += name;
  }
  h += ",ref_lnn_lnlnn,ref_np23\n";
  return h;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = sweep_csv_header();
  for (const auto& r : rows) {
    append_int(out, r.n);
    out += ',';
    append_int(out, r.trial);
    out += ',';
    append_int(out, r.seed);
    out += ',';
    append_real(out, r.lambda1);
    out += ',';
    append_int(out, r.max_degree);
    out += ',';
    append_int(out, r.first_fit_lower);
    for (double b : r.bounds) {
      out += ',';
      append_real(out, b);
    }
    out += ',';
    append_real(out, r.ref_lnn_lnlnn);
    out += ',';
    append_real(out, r.ref_np23);
    out += '\n';
  }
  return out;
}

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const std::string text = sweep_csv(rows);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

std::vector<SweepRow> parse_sweep_csv(std::string_view text) {
  const std::string header = sweep_csv_header();
  if (text.substr(0, header.size()) != header) {
    throw std::invalid_argument("sweep CSV header mismatch");
  }
  text.remove_prefix(header.size());
  std::vector<SweepRow> rows;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) throw std::invalid_argument("unterminated CSV line");
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl + 1);
    std::vector<std::string_view> cells;
    for (;;) {
      const auto comma = line.find(',');
      cells.push_back(line.substr(0, comma));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (cells.size() != 6 + kSweepBoundNames.size() + 2) {
      throw std::invalid_argument("wrong number of CSV cells");
    }
    auto num = [](std::string_view cell, auto& out) {
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
      if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw std::invalid_argument("bad CSV cell '" + std::string(cell) + "'");
      }
    };
    SweepRow r;
    std::size_t i = 0;
    num(cells[i++], r.n);
    num(cells[i++], r.trial);
    num(cells[i++], r.seed);
    num(cells[i++], r.lambda1);
    num(cells[i++], r.max_degree);
    num(cells[i++], r.first_fit_lower);
    for (double& b : r.bounds) num(cells[i++], b);
    num(cells[i++], r.ref_lnn_lnlnn);
    num(cells[i++], r.ref_np23);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace grundy
