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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grundy {

struct PropertyResult {
  std::string property;
  bool passed = true;
  std::uint64_t checked = 0;  ///< number of instances examined
  std::string detail;         ///< first counterexample, if any
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyResult> properties;
  bool passed() const;
};

struct VerifyOptions {
  /// Order of the largest connected graphs enumerated (at most 7).
  int max_n = 6;
  unsigned workers = 1;
};

/// pathtree-identity, forest-mu-phi, matching-roots, grundy-engines,
/// bounds-soundness, atoms-chain, interlacing, sorted-minimizer, tk-sandwich,
/// lambda-endpoints.
std::span<const std::string_view> verify_suite_names();

/// Throws std::out_of_range for an unknown suite name.
SuiteResult run_verify_suite(std::string_view name, const VerifyOptions& options = {});

}  // namespace grundy
