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


#include "mhdt/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "mhdt/error.hpp"

namespace mhdt {

namespace {

using Word = std::uint64_t;

std::size_t ceil_log2_word(std::size_t n) { return ceil_log2(n); }

class ExactSolver {
 public:
  explicit ExactSolver(const InstanceSet& a) : a_(a) {
    cols_.reserve(a.width());
    for (const BitVector& c : a.columns()) cols_.push_back(c.low_word());
  }

  std::size_t solve(Word live) {
    const auto size = static_cast<std::size_t>(std::popcount(live));
    if (size <= 1) return 0;
    if (auto it = memo_.find(live); it != memo_.end()) return it->second.depth;

    const std::size_t floor = ceil_log2_word(size);
    // The greedy depth is achievable, so only strictly better columns count.
    std::size_t best = greedy_depth(live) + 1;
    std::size_t best_col = cols_.size();
    for (std::size_t j = 0; j < cols_.size() && best > floor; ++j) {
      const Word one = live & cols_[j];
      const Word zero = live & ~cols_[j];
      if (one == 0 || zero == 0) continue;
      const bool one_bigger = std::popcount(one) >= std::popcount(zero);
      const Word big = one_bigger ? one : zero;
      const Word small = one_bigger ? zero : one;
      if (1 + ceil_log2_word(static_cast<std::size_t>(std::popcount(big))) >= best) continue;
      const std::size_t big_depth = solve(big);
      if (1 + big_depth >= best) continue;
      const std::size_t small_depth = solve(small);
      const std::size_t value = 1 + std::max(big_depth, small_depth);
      if (value < best) {
        best = value;
        best_col = j;
      }
    }
    if (best_col == cols_.size()) {
      throw InvariantViolation("exact search found no column at or below the greedy depth");
    }
    memo_.emplace(live, Entry{best, best_col});
    return best;
  }

  DecisionTree build(Word live) const {
    if (std::popcount(live) == 1) {
      return DecisionTree::leaf(a_.row(static_cast<std::size_t>(std::countr_zero(live))));
    }
    const Entry& e = memo_.at(live);
    const Word c = cols_[e.column];
    return DecisionTree::node(e.column, build(live & ~c), build(live & c));
  }

 private:
  struct Entry {
    std::size_t depth;
    std::size_t column;
  };

  std::size_t greedy_depth(Word live) const {
    const auto size = static_cast<std::size_t>(std::popcount(live));
    if (size <= 1) return 0;
    std::size_t best_min = 0;
    std::size_t best_col = 0;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      const auto ones = static_cast<std::size_t>(std::popcount(live & cols_[j]));
      const std::size_t m = std::min(ones, size - ones);
      if (m > best_min) {
        best_min = m;
        best_col = j;
      }
    }
    if (best_min == 0) throw DegenerateSplit("no column splits the live rows");
    return 1 + std::max(greedy_depth(live & cols_[best_col]), greedy_depth(live & ~cols_[best_col]));
  }

  const InstanceSet& a_;
  std::vector<Word> cols_;
  std::unordered_map<Word, Entry> memo_;
};

DecisionTree greedy_build(const InstanceSet& a, const BitVector& live) {
  if (live.count() == 1) return DecisionTree::leaf(a.row(live.find_first()));
  const std::size_t j = greedy_column(a, live);
  BitVector zero = live;
  zero.and_not(a.column(j));
  return DecisionTree::node(j, greedy_build(a, zero), greedy_build(a, live & a.column(j)));
}

}  // namespace

OptResult opt_exact(const InstanceSet& a, const Limits& limits) {
  const std::size_t cap = std::min<std::size_t>(limits.opt_exact_n_limit, 64);
  if (a.size() > cap) {
    throw ExactLimitExceeded("exact OPT needs n <= " + std::to_string(cap) + ", got n = " +
                             std::to_string(a.size()));
  }
  ExactSolver solver(a);
  const Word all = a.all_rows().low_word();
  const std::size_t depth = solver.solve(all);
  return {depth, solver.build(all)};
}

std::size_t greedy_column(const InstanceSet& a, const BitVector& live) {
  const std::size_t size = live.count();
  std::size_t best_min = 0;
  std::size_t best_col = a.width();
  for (std::size_t j = 0; j < a.width(); ++j) {
    const std::size_t ones = (live & a.column(j)).count();
    const std::size_t m = std::min(ones, size - ones);
    if (m > best_min) {
      best_min = m;
      best_col = j;
    }
  }
  if (best_col == a.width()) throw DegenerateSplit("no column splits the live rows");
  return best_col;
}

DecisionTree greedy_tree(const InstanceSet& a) { return greedy_build(a, a.all_rows()); }

}  // namespace mhdt
