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


#include "mhdt/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "mhdt/error.hpp"
#include "mhdt/solvers.hpp"

namespace mhdt {

bool QueryTranscript::has_repeats() const {
  std::unordered_set<std::size_t> seen;
  for (const Query& q : queries) {
    if (!seen.insert(q.index).second) return true;
  }
  return false;
}

bool QueryTranscript::consistent() const {
  if (!result) return true;
  return std::all_of(queries.begin(), queries.end(),
                     [&](const Query& q) { return result->test(q.index) == q.answer; });
}

FixedOracle::FixedOracle(const InstanceSet& a, std::size_t row) : hidden_(a.width()), row_(row) {
  if (row >= a.size()) {
    throw IndexError("hidden row " + std::to_string(row + 1) + " out of range [1, " +
                     std::to_string(a.size()) + "]");
  }
  hidden_ = a.row(row);
}

AdversaryOracle::AdversaryOracle(const InstanceSet& a, IndexSet subset)
    : a_(a), subset_mask_(a.size()), majority_(a.width()), live_(a.all_rows()) {
  if (subset.empty()) throw IndexError("adversary subset must be nonempty");
  for (std::size_t i : subset) {
    if (i >= a.size()) throw IndexError("adversary subset row " + std::to_string(i + 1) + " out of range");
    subset_mask_.set(i);
  }
  majority_ = maj(*a.select(subset_mask_));
}

bool AdversaryOracle::answer(std::size_t index) {
  if (index >= a_.width()) throw IndexError("query " + std::to_string(index + 1) + " out of range");
  bool bit = majority_.test(index);
  // When every remaining row agrees at `index` the answer is forced; the
  // majority answer would leave no row to commit to.
  const BitVector ones = live_ & a_.column(index);
  if (bit ? ones.none() : ones == live_) bit = !bit;
  if (bit) {
    live_ &= a_.column(index);
  } else {
    live_.and_not(a_.column(index));
  }
  return bit;
}

BitVector AdversaryOracle::finalize() const {
  const BitVector in_subset = live_ & subset_mask_;
  if (in_subset.any()) return a_.row(in_subset.find_first());
  if (live_.any()) return a_.row(live_.find_first());
  throw InconsistentOracle("adversary answers rule out every row");
}

SpecOracle exact_spec_oracle() {
  return [](const InstanceSet& live, const BitVector& h) { return specifying_set_min(live, h); };
}

SpecOracle greedy_spec_oracle() {
  return [](const InstanceSet& live, const BitVector& h) { return specifying_set_greedy(live, h); };
}

namespace {

// Shared bookkeeping: the live row mask, the transcript, and the set of
// coordinates already asked.
class Session {
 public:
  Session(const InstanceSet& a, AnswerOracle& oracle, std::string learner)
      : a_(a), oracle_(oracle), live_(a.all_rows()), asked_(a.width()) {
    transcript_.learner = std::move(learner);
    transcript_.oracle = oracle.name();
  }

  const BitVector& live() const { return live_; }
  std::size_t live_count() const { return live_.count(); }
  bool asked(std::size_t j) const { return asked_.test(j); }

  bool ask(std::size_t j) {
    if (asked_.test(j)) throw InvariantViolation("coordinate " + std::to_string(j + 1) + " asked twice");
    asked_.set(j);
    const bool bit = oracle_.answer(j);
    transcript_.queries.push_back({j, bit});
    if (bit) {
      live_ &= a_.column(j);
    } else {
      live_.and_not(a_.column(j));
    }
    if (live_.none()) throw InconsistentOracle("answers rule out every row of the instance set");
    return bit;
  }

  /// Live rows whose bit j equals `value`.
  std::size_t agreeing(std::size_t j, bool value) const {
    const std::size_t ones = (live_ & a_.column(j)).count();
    return value ? ones : live_.count() - ones;
  }

  InstanceSet live_set() const { return *a_.select(live_); }

  void add_phase(const Phase& p) { transcript_.phases.push_back(p); }

  QueryTranscript finish() {
    if (live_.count() == 1) transcript_.result = a_.row(live_.find_first());
    return std::move(transcript_);
  }

 private:
  const InstanceSet& a_;
  AnswerOracle& oracle_;
  BitVector live_;
  BitVector asked_;
  QueryTranscript transcript_;
};

IndexSet checked_spec_set(const SpecOracle& spec, const InstanceSet& live, const BitVector& h,
                          std::size_t e_bound) {
  IndexSet s = spec(live, h);
  if (s.size() > e_bound) {
    throw SpecSetTooLarge("specifying set of size " + std::to_string(s.size()) + " exceeds bound " +
                          std::to_string(e_bound));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

QueryTranscript moshkov_learn(const InstanceSet& a, AnswerOracle& oracle, const SpecOracle& spec,
                              std::size_t e_bound) {
  Session session(a, oracle, "moshkov");
  while (session.live_count() >= 2) {
    const std::size_t before = session.live_count();
    const BitVector h = maj(session.live_set());
    IndexSet s = checked_spec_set(spec, session.live_set(), h, e_bound);
    // Asked coordinates are constant on the live rows, so h already agrees
    // with their answers there; asking again would reveal nothing.
    std::erase_if(s, [&](std::size_t z) { return session.asked(z); });

    std::size_t k = 0;
    while (true) {
      if (s.empty()) {
        throw InvariantViolation("specifying set exhausted with " + std::to_string(session.live_count()) +
                                 " rows still consistent");
      }
      auto y_it = s.begin();
      std::size_t y_size = session.agreeing(*y_it, h.test(*y_it));
      for (auto it = std::next(s.begin()); it != s.end(); ++it) {
        const std::size_t size = session.agreeing(*it, h.test(*it));
        if (size < y_size) {
          y_size = size;
          y_it = it;
        }
      }
      const std::size_t y = *y_it;
      s.erase(y_it);
      const bool bit = session.ask(y);
      ++k;
      if (bit != h.test(y) || session.live_count() == 1) break;
    }
    const std::size_t after = session.live_count();
    session.add_phase({before, k, after});
    // Every round except the last shrinks the live set by max(2, k).
    if (after >= 2 && after * std::max<std::size_t>(2, k) > before) {
      throw InvariantViolation("round shrank live rows from " + std::to_string(before) + " to " +
                               std::to_string(after) + " with " + std::to_string(k) + " queries");
    }
  }
  return session.finish();
}

double default_epsilon(std::size_t e_bound) {
  if (e_bound < 3) return 0.5;
  const double e = static_cast<double>(e_bound);
  return std::min(0.5, std::log(e) / e);
}

QueryTranscript epsilon_learn(const InstanceSet& a, AnswerOracle& oracle, double epsilon,
                              const SpecOracle& spec, std::size_t e_bound) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  Session session(a, oracle, "epsilon");
  while (session.live_count() >= 2) {
    const std::size_t before = session.live_count();
    const double live = static_cast<double>(before);
    std::size_t balanced = a.width();
    for (std::size_t j = 0; j < a.width(); ++j) {
      const auto zeros = static_cast<double>(session.agreeing(j, false));
      if (epsilon * live <= zeros && zeros <= (1.0 - epsilon) * live) {
        balanced = j;
        break;
      }
    }
    if (balanced != a.width()) {
      session.ask(balanced);
      session.add_phase({before, 1, session.live_count(), true});
      continue;
    }

    const BitVector h = maj(session.live_set());
    IndexSet s = checked_spec_set(spec, session.live_set(), h, e_bound);
    std::erase_if(s, [&](std::size_t z) { return session.asked(z); });
    bool agreed = true;
    std::size_t k = 0;
    for (std::size_t z : s) {
      if (session.live_count() == 1) break;
      agreed &= session.ask(z) == h.test(z);
      ++k;
    }
    if (agreed && session.live_count() != 1) {
      throw InvariantViolation("answers agree with the majority on its specifying set but " +
                               std::to_string(session.live_count()) + " rows remain");
    }
    session.add_phase({before, k, session.live_count(), false});
  }
  return session.finish();
}

QueryTranscript greedy_learn(const InstanceSet& a, AnswerOracle& oracle) {
  Session session(a, oracle, "greedy");
  while (session.live_count() >= 2) session.ask(greedy_column(a, session.live()));
  return session.finish();
}

QueryTranscript tree_learn(const InstanceSet& a, const DecisionTree& tree, AnswerOracle& oracle,
                           std::string learner_name) {
  Session session(a, oracle, std::move(learner_name));
  const DecisionTree* node = &tree;
  while (!node->is_leaf()) node = &node->child(session.ask(node->index()));
  QueryTranscript t = session.finish();
  t.result = node->label();
  return t;
}

Learner parse_learner(std::string_view name) {
  if (name == "greedy") return Learner::kGreedy;
  if (name == "moshkov") return Learner::kMoshkov;
  if (name == "epsilon") return Learner::kEpsilon;
  if (name == "exact-tree") return Learner::kExactTree;
  throw InputError("unknown learner '" + std::string(name) + "' (expected greedy, moshkov, epsilon or exact-tree)");
}

std::string learner_name(Learner learner) {
  switch (learner) {
    case Learner::kGreedy:
      return "greedy";
    case Learner::kMoshkov:
      return "moshkov";
    case Learner::kEpsilon:
      return "epsilon";
    case Learner::kExactTree:
      return "exact-tree";
  }
  return "unknown";
}

QueryTranscript play_game(const InstanceSet& a, Learner learner, AnswerOracle& oracle,
                          const GameOptions& options) {
  // Without an explicit bound the exact oracle is held to ETD(A); the greedy
  // oracle has no a-priori bound.
  auto spec_bound = [&]() -> std::size_t {
    if (options.e_bound) return *options.e_bound;
    if (options.greedy_spec) return std::numeric_limits<std::size_t>::max();
    return etd(a, options.limits).value;
  };
  const SpecOracle spec = options.greedy_spec ? greedy_spec_oracle() : exact_spec_oracle();
  QueryTranscript t;
  switch (learner) {
    case Learner::kGreedy:
      t = greedy_learn(a, oracle);
      break;
    case Learner::kMoshkov:
      t = moshkov_learn(a, oracle, spec, spec_bound());
      break;
    case Learner::kEpsilon: {
      const std::size_t e = spec_bound();
      double eps = 0.5;
      if (options.epsilon) {
        eps = *options.epsilon;
      } else if (e != std::numeric_limits<std::size_t>::max()) {
        eps = default_epsilon(e);
      }
      t = epsilon_learn(a, oracle, eps, spec, e);
      break;
    }
    case Learner::kExactTree:
      t = tree_learn(a, opt_exact(a, options.limits).tree, oracle, "exact-tree");
      break;
  }
  if (!t.consistent()) throw InvariantViolation("learner result disagrees with an answer");
  return t;
}

double halving_query_bound(std::size_t e, std::size_t n) {
  if (e == 0) return 0.0;
  const double log_n = std::log2(static_cast<double>(n));
  const double ed = static_cast<double>(e);
  if (e >= 4) return ed + ed / std::log2(ed) * log_n;
  return 2.0 * ed / std::log2(std::max(ed, 2.0)) * log_n;
}

}  // namespace mhdt
