// Copyright 2026 The mhdt Authors.
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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mhdt/instance_set.hpp"
#include "mhdt/measures.hpp"

namespace mhdt {

struct VerifyConfig {
  static constexpr std::uint64_t kDefaultSeed = 20260101;

  std::uint64_t seed = kDefaultSeed;
  /// Random corpus instances (n <= 10, m <= 8) on top of the exhaustive part.
  std::size_t cases = 5000;
  /// Include every instance set with n <= 6 rows of width m <= 4.
  bool exhaustive = true;
  /// Randomized learner-vs-oracle games in the "learners" suite.
  std::size_t games = 10000;
  /// Run only this suite.
  std::optional<std::string> suite;
  Limits limits;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// The first few failing cases, for diagnosis.
  std::vector<std::string> examples;
};

struct VerifySummary {
  std::uint64_t seed = 0;
  std::size_t corpus_size = 0;
  std::vector<SuiteResult> suites;

  bool pass() const;
  /// Deterministic report: a header naming the seed, then one line per
  /// suite with its counts.
  std::string text() const;
};

/// Names accepted by VerifyConfig::suite, in run order.
const std::vector<std::string>& verify_suite_names();

/// Every instance set of n <= max_n distinct rows of width m <= max_m, in
/// (m, n, lexicographic row choice) order.
std::vector<InstanceSet> exhaustive_corpus(std::size_t max_n, std::size_t max_m);
/// `count` random instance sets with m uniform in [1, max_m] and n uniform in
/// [1, min(max_n, 2^m)].
std::vector<InstanceSet> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n = 10,
                                       std::size_t max_m = 8);

/// Runs the selected invariant suites. Throws InputError for an unknown suite.
VerifySummary run_verify(const VerifyConfig& config);

}  // namespace mhdt
