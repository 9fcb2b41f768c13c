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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhdt/bit_vector.hpp"
#include "mhdt/decision_tree.hpp"
#include "mhdt/instance_set.hpp"
#include "mhdt/measures.hpp"

namespace mhdt {

struct Query {
  std::size_t index;  // 0-based coordinate
  bool answer;
};

/// One majority round of a halving learner (or one balanced query of the
/// epsilon learner).
struct Phase {
  std::size_t live_before;
  std::size_t queries;
  std::size_t live_after;
  bool balanced = false;  // epsilon learner: a single balanced-column query
};

struct QueryTranscript {
  std::string learner;
  std::string oracle;
  std::vector<Query> queries;
  /// nullopt when the game ended unresolved.
  std::optional<BitVector> result;
  std::vector<Phase> phases;

  std::size_t count() const { return queries.size(); }
  /// No coordinate appears twice.
  bool has_repeats() const;
  /// `result` agrees with every recorded answer.
  bool consistent() const;
};

/// Answers "what is bit i of the hidden element?".
class AnswerOracle {
 public:
  virtual ~AnswerOracle() = default;
  virtual bool answer(std::size_t index) = 0;
  /// The element the oracle commits to; agrees with every answer given.
  virtual BitVector finalize() const = 0;
  virtual std::string name() const = 0;
};

/// Honest oracle hiding row `row` of A.
class FixedOracle final : public AnswerOracle {
 public:
  FixedOracle(const InstanceSet& a, std::size_t row);
  bool answer(std::size_t index) override { return hidden_.test(index); }
  BitVector finalize() const override { return hidden_; }
  std::string name() const override { return "hidden=" + std::to_string(row_ + 1); }

 private:
  BitVector hidden_;
  std::size_t row_;
};

/// Answers MAJ(B)_i for a subset B of A fixed at construction, except when
/// every row of A still consistent agrees at i; then it gives that forced
/// answer, which removes nothing. Each answer removes at most MAMI(B) rows
/// of B, so any learner needs at least (|B|-1)/MAMI(B) queries before B is
/// down to one consistent row.
class AdversaryOracle final : public AnswerOracle {
 public:
  /// `subset` holds row indices of `a`; must be nonempty.
  AdversaryOracle(const InstanceSet& a, IndexSet subset);
  bool answer(std::size_t index) override;
  /// Lowest-index row of B consistent with the answers, else the lowest-index
  /// such row of A. Throws InconsistentOracle when no row of A remains.
  BitVector finalize() const override;
  std::string name() const override { return "adversary"; }

  const BitVector& answers_vector() const { return majority_; }
  /// Rows of B consistent with every answer so far.
  std::size_t survivors_in_subset() const { return (live_ & subset_mask_).count(); }

 private:
  const InstanceSet& a_;
  BitVector subset_mask_;
  BitVector majority_;
  BitVector live_;  // rows of A consistent with the answers
};

/// Maps (live rows, hypothesis) to a specifying set of the live rows.
using SpecOracle = std::function<IndexSet(const InstanceSet& live, const BitVector& h)>;

SpecOracle exact_spec_oracle();
SpecOracle greedy_spec_oracle();

/// Majority-hypothesis halving learner: each round takes h = MAJ(live), a
/// specifying set S for h, then repeatedly queries the coordinate of S
/// with the fewest live rows agreeing with h, until an answer disagrees
/// with h or one row is left. Throws SpecSetTooLarge when `spec` returns
/// more than `e_bound` coordinates and InconsistentOracle when the answers
/// rule out every row.
QueryTranscript moshkov_learn(const InstanceSet& a, AnswerOracle& oracle, const SpecOracle& spec,
                              std::size_t e_bound);

/// ln(E)/E clamped to (0, 1/2].
double default_epsilon(std::size_t e_bound);

/// Queries a column splitting the live rows within [eps, 1-eps] when one
/// exists; otherwise queries the specifying set of the majority hypothesis.
QueryTranscript epsilon_learn(const InstanceSet& a, AnswerOracle& oracle, double epsilon,
                              const SpecOracle& spec, std::size_t e_bound);

/// Walks greedy_tree(a) adaptively.
QueryTranscript greedy_learn(const InstanceSet& a, AnswerOracle& oracle);

/// Walks a precomputed tree.
QueryTranscript tree_learn(const InstanceSet& a, const DecisionTree& tree, AnswerOracle& oracle,
                           std::string learner_name = "tree");

enum class Learner { kGreedy, kMoshkov, kEpsilon, kExactTree };

/// "greedy", "moshkov", "epsilon", "exact-tree"; throws InputError otherwise.
Learner parse_learner(std::string_view name);
std::string learner_name(Learner learner);

struct GameOptions {
  Limits limits;
  /// Specifying-set size bound; defaults to ETD(A).
  std::optional<std::size_t> e_bound;
  /// Use the greedy specifying set instead of the exact one.
  bool greedy_spec = false;
  std::optional<double> epsilon;
};

/// Runs `learner` against `oracle` and checks that the result agrees with
/// every answer (InvariantViolation otherwise).
QueryTranscript play_game(const InstanceSet& a, Learner learner, AnswerOracle& oracle,
                          const GameOptions& options = {});

/// Query bound for the halving learner with specifying sets of size <= e:
/// e + (e/log2 e) log2 n for e >= 4, (2e/log2 max(e,2)) log2 n for
/// e in {1,2,3}, and 0 for e = 0.
double halving_query_bound(std::size_t e, std::size_t n);

}  // namespace mhdt
