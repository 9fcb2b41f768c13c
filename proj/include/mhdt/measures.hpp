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
#include <span>
#include <vector>

#include "mhdt/bit_vector.hpp"
#include "mhdt/fraction.hpp"
#include "mhdt/instance_set.hpp"

namespace mhdt {

/// Sorted, 0-based coordinate (or row) indices.
using IndexSet = std::vector<std::size_t>;

/// Size limits for the exponential exact searches.
struct Limits {
  std::size_t etd_exact_m_limit = 16;
  std::size_t den_exact_n_limit = 20;
  std::size_t opt_exact_n_limit = 24;
  /// Domain size above which exact witness sets are refused.
  std::size_t witness_exact_x_limit = 64;
};

/// Per-column majority; a column with as many ones as zeros maps to 1.
BitVector maj(const InstanceSet& a);
/// Largest column popcount.
std::size_t max_ones(const InstanceSet& a);
/// max_j min(|A_{j,0}|, |A_{j,1}|).
std::size_t mami(const InstanceSet& a);
/// MAX(A + MAJ(A)); equal to mami() for every A.
std::size_t mami_via_majority(const InstanceSet& a);

// Hitting sets. Rows are vectors over `width` coordinates; zero rows need not
// be hit. Duplicate rows are allowed.

/// Minimum hitting set, lexicographically smallest among the minimum ones.
/// Branch and bound over coordinates in index order, pruned with the
/// counting bound |unhit| / (most rows any remaining coordinate hits).
IndexSet min_hitting_set(std::span<const BitVector> rows, std::size_t width);
/// Repeatedly takes the coordinate hitting the most unhit rows (lowest index
/// on ties).
IndexSet greedy_hitting_set(std::span<const BitVector> rows, std::size_t width);

IndexSet hitting_set_min(const InstanceSet& a);
IndexSet hitting_set_greedy(const InstanceSet& a);

// Specifying sets.

/// At most one row of `a` agrees with `h` on every coordinate of `s`.
bool is_specifying_set(const InstanceSet& a, const BitVector& h, std::span<const std::size_t> s);
/// Exactly one agreeing row when h is in A, none otherwise.
bool is_strong_specifying_set(const InstanceSet& a, const BitVector& h,
                              std::span<const std::size_t> s);

/// Minimum specifying set for `h`, found by iterative deepening over the set
/// size on the shifted set A+h. Throws Overbudget when no set of size
/// <= `budget` exists.
IndexSet specifying_set_min(const InstanceSet& a, const BitVector& h,
                            std::optional<std::size_t> budget = std::nullopt);
/// Minimum strong specifying set, i.e. a minimum hitting set of A+h.
IndexSet strong_specifying_set_min(const InstanceSet& a, const BitVector& h);
/// Greedy specifying set: keeps adding the coordinate that removes the most
/// rows still agreeing with `h` until at most one remains.
IndexSet specifying_set_greedy(const InstanceSet& a, const BitVector& h);

std::size_t etd_at(const InstanceSet& a, const BitVector& h);
std::size_t setd_at(const InstanceSet& a, const BitVector& h);
std::size_t etd_z(const InstanceSet& a);
std::size_t setd_z(const InstanceSet& a);

struct DimensionResult {
  std::size_t value = 0;
  /// First hypothesis attaining `value` (in the order examined).
  BitVector argmax;
  /// True when only a sample of hypotheses was examined; `value` is then a
  /// lower bound.
  bool sampled = false;
};

/// Options for the max-over-hypotheses measures.
struct DimensionOptions {
  /// When set and m exceeds the exact limit, examine this many random
  /// hypotheses plus MAJ(A) and every row of A.
  std::optional<std::size_t> sample;
  std::uint64_t seed = 1;
};

/// max over h of etd_at. Throws ExactLimitExceeded when m exceeds the limit
/// and no sample is requested.
DimensionResult etd(const InstanceSet& a, const Limits& limits = {}, const DimensionOptions& opts = {});
DimensionResult setd(const InstanceSet& a, const Limits& limits = {}, const DimensionOptions& opts = {});

struct DensityResult {
  Fraction value;
  /// Row indices of a maximizing subset (empty when n = 1).
  IndexSet witness;
};

/// max over B subset of A with |B| >= 2 of (|B|-1)/MAMI(B); 0 for n = 1.
/// Ties keep the lexicographically smallest witness.
DensityResult den_exact(const InstanceSet& a, const Limits& limits = {});
/// A lower bound on the density from hill climbing over single-row
/// additions and removals, started from A and from `effort` random subsets.
DensityResult den_lower(const InstanceSet& a, std::size_t effort);

/// (|B|-1)/MAMI(B) for the rows of `a` selected by `rows`; 0 when |B| < 2.
Fraction density_of(const InstanceSet& a, std::span<const std::size_t> rows);

}  // namespace mhdt
