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

// grundy: command-line front end.
//
// Exit codes: 0 success, 1 domain error (bad graph, cap exceeded, failed
// verification), 2 usage error (bad flags, bad sweep config, unknown suite).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "grundy/atoms.hpp"
#include "grundy/bounds.hpp"
#include "grundy/experiments.hpp"
#include "grundy/graph.hpp"
#include "grundy/parallel.hpp"
#include "grundy/serialize.hpp"
#include "grundy/verify.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

// Thrown for usage problems detected after flag parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

struct AnalyzeArgs {
  std::string file;
  std::uint64_t budget = grundy::kDefaultSearchBudget;
  bool json = false;
  bool csv = false;
};

int cmd_analyze(const AnalyzeArgs& a) {
  std::string text;
  try {
    text = read_file(a.file);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
  const grundy::Graph g = grundy::parse_edge_list(text);
  grundy::ReportBudget budget;
  budget.search_expansions = a.budget;
  const auto report = grundy::bound_report(g, fs::path(a.file).stem().string(), budget);
  if (a.csv) {
    std::cout << grundy::report_csv_header() << grundy::report_csv_row(report);
  } else {
    std::cout << grundy::report_to_json(report).dump(2) << "\n";
  }
  return kOk;
}

struct AtomsArgs {
  int k = 0;
  int n_max = 0;
  std::string out;
};

int cmd_atoms(const AtomsArgs& a) {
  const auto atoms = grundy::enumerate_atoms(a.k, a.n_max);
  const fs::path dir(a.out);
  fs::create_directories(dir);
  grundy::Json files = grundy::Json::array();
  std::map<int, int> by_order;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "atom_k%d_%04zu.json", a.k, i);
    write_file(dir / name, grundy::atom_to_json(atoms[i]).dump() + "\n");
    files.push_back(name);
    ++by_order[atoms[i].graph.order()];
  }
  grundy::Json counts = grundy::Json::object();
  for (const auto& [n, c] : by_order) counts[std::to_string(n)] = c;
  const grundy::Json manifest = {{"k", a.k},
                                 {"n_max", a.n_max},
                                 {"count", atoms.size()},
                                 {"count_by_order", counts},
                                 {"files", files}};
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  std::cout << manifest.dump() << "\n";
  return kOk;
}

int cmd_tk(int k_max) {
  std::cout << grundy::tk_table_csv(k_max);
  return kOk;
}

struct VerifyArgs {
  std::string suite;
  int max_n = 6;
  unsigned workers = 1;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::string_view> suites;
  if (a.suite == "all") {
    const auto names = grundy::verify_suite_names();
    suites.assign(names.begin(), names.end());
  } else {
    const auto names = grundy::verify_suite_names();
    if (std::find(names.begin(), names.end(), a.suite) == names.end()) {
      throw UsageError("unknown suite '" + a.suite + "'");
    }
    suites.push_back(a.suite);
  }
  grundy::VerifyOptions options;
  options.max_n = a.max_n;
  options.workers = a.workers;
  bool ok = true;
  for (auto name : suites) {
    const auto result = grundy::run_verify_suite(name, options);
    for (const auto& p : result.properties) {
      std::cout << (p.passed ? "PASS " : "FAIL ") << result.suite << ": " << p.property
                << " (" << p.checked << " checked)";
      if (!p.passed) std::cout << " counterexample: " << p.detail;
      std::cout << "\n";
    }
    ok = ok && result.passed();
  }
  std::cout << (ok ? "all properties passed" : "some properties failed") << "\n";
  return ok ? kOk : kDomainError;
}

struct SweepArgs {
  std::string config;
  std::string out;
  unsigned workers = 0;
};

int cmd_sweep(const SweepArgs& a) {
  std::string text;
  try {
    text = read_file(a.config);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  const auto config = grundy::parse_sweep_config(text);
  const unsigned workers = a.workers ? a.workers : grundy::default_workers();
  const auto result = grundy::run_sweep(config, workers);
  if (result.truncated) {
    std::cerr << "warning: sweep truncated after " << result.rows.size()
              << " rows (max_vertex_trials reached)\n";
  }
  if (a.out.empty()) {
    std::cout << grundy::sweep_csv(result.rows);
  } else {
    grundy::emit_csv(result.rows, a.out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grundy number bounds: exact values, spectral bounds, atoms and sweeps"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Report exact values and every bound for a graph file");
  an->add_option("graph_file", analyze.file, "Edge-list file")->required();
  an->add_option("--exact-budget", analyze.budget, "Search node budget for exact Grundy/chromatic")
      ->check(CLI::PositiveNumber);
  auto* json_flag = an->add_flag("--json", analyze.json, "JSON output (default)");
  auto* csv_flag = an->add_flag("--csv", analyze.csv, "CSV header plus one row");
  json_flag->excludes(csv_flag);

  AtomsArgs atoms;
  auto* at = app.add_subcommand("atoms", "Enumerate k-atoms up to a vertex count");
  at->add_option("--k", atoms.k, "Atom level")->required();
  at->add_option("--n-max", atoms.n_max, "Largest vertex count")->required();
  at->add_option("--out", atoms.out, "Output directory")->required();

  int k_max = 0;
  auto* tk = app.add_subcommand("tk", "Table of lambda1(T_k) against sqrt(2(k-1))");
  tk->add_option("--k-max", k_max, "Largest k")->required()->check(CLI::Range(1, 1'000'000));

  VerifyArgs verify;
  auto* ve = app.add_subcommand("verify", "Run an invariant suite");
  std::string suite_help = "Suite name or 'all':";
  for (auto name : grundy::verify_suite_names()) suite_help += " " + std::string(name);
  ve->add_option("--suite", verify.suite, suite_help)->required();
  ve->add_option("--max-n", verify.max_n, "Largest order of enumerated connected graphs")
      ->check(CLI::Range(1, grundy::ConnectedGraphs::kMaxOrder));
  ve->add_option("--workers", verify.workers, "Worker threads")->check(CLI::PositiveNumber);

  SweepArgs sweep;
  auto* sw = app.add_subcommand("sweep", "Random-graph sweep to CSV");
  sw->add_option("config", sweep.config, "Key-value sweep config")->required();
  sw->add_option("--out", sweep.out, "Output CSV (default: stdout)");
  sw->add_option("--workers", sweep.workers, "Worker threads (default: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*an) return cmd_analyze(analyze);
    if (*at) return cmd_atoms(atoms);
    if (*tk) return cmd_tk(k_max);
    if (*ve) return cmd_verify(verify);
    if (*sw) return cmd_sweep(sweep);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const grundy::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}
