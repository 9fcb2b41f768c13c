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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mhdt/fraction.hpp"
#include "mhdt/instance_set.hpp"
#include "mhdt/measures.hpp"

namespace mhdt {

/// One named inequality lhs <= rhs (or lhs == rhs) evaluated on an instance.
struct BoundFlag {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass;
};

struct MeasuresReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::string maj;
  std::size_t max = 0;
  std::size_t mami = 0;
  /// Absent past the exact limit unless sampling was requested.
  std::optional<std::size_t> etd;
  bool etd_sampled = false;
  std::optional<std::size_t> setd;
  bool setd_sampled = false;
  std::size_t etd_z = 0;
  std::size_t setd_z = 0;
  std::size_t hs = 0;
  std::size_t hs_greedy = 0;
  Fraction den;
  /// False when `den` is only the hill-climbing lower bound.
  bool den_exact = true;
  /// 0-based rows of the subset attaining `den`.
  IndexSet den_witness;
  double log2n = 0;
  std::size_t ceil_log2n = 0;
  std::optional<std::size_t> opt;
  std::size_t greedy_depth = 0;
  /// Upper bound on OPT from the halving learner, from exact ETD.
  std::optional<double> lbo2_bound;
  std::vector<BoundFlag> flags;
  /// Flags not evaluated because an input was absent or inexact.
  std::vector<std::string> skipped_flags;
  std::vector<std::string> notes;

  bool all_pass() const;
};

struct ReportOptions {
  Limits limits;
  DimensionOptions dimension;
  /// Random restarts for den_lower past the exact limit.
  std::size_t den_effort = 32;
};

/// OPT upper bound used by the report: n-1 for ETD <= 1,
/// 2E log2 n / log2 max(E,2) for E = 2, E + (E/log2 E) log2 n for E >= 3.
double lbo2_bound(std::size_t etd, std::size_t n);

/// Every measure plus the bound flags. Limit failures of a single field are
/// recorded in `notes` and skip the dependent flags.
MeasuresReport bounds_report(const InstanceSet& a, const ReportOptions& options = {});

/// Flat object with the fields above (rows 1-based, den as "p/q") and a
/// "flags" array of {name, lhs, rhs, pass}.
nlohmann::ordered_json report_to_json(const MeasuresReport& r);
std::string report_to_text(const MeasuresReport& r);

}  // namespace mhdt
