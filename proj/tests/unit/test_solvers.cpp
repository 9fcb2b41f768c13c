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


#include <cmath>
#include <limits>

#include "doctest.h"
#include "mhdt/error.hpp"
#include "mhdt/game.hpp"
#include "mhdt/random.hpp"
#include "mhdt/solvers.hpp"
#include "oracles.hpp"

using mhdt::BitVector;
using mhdt::InstanceSet;
using mhdt::QueryTranscript;

namespace {

const InstanceSet kFullB2 = InstanceSet::from_strings({"00", "01", "10", "11"});

InstanceSet random_small(mhdt::Rng& rng, std::size_t max_n = 10, std::size_t max_m = 7) {
  const std::size_t m = rng.between(1, max_m);
  const std::size_t n = rng.between(1, std::min<std::size_t>(max_n, std::size_t{1} << m));
  return mhdt::random_instance(rng, n, m);
}

std::vector<std::size_t> indices(const QueryTranscript& t) {
  std::vector<std::size_t> out;
  for (const mhdt::Query& q : t.queries) out.push_back(q.index);
  return out;
}

}  // namespace

TEST_SUITE("solvers") {

TEST_CASE("exact solver examples") {
  const mhdt::OptResult full = mhdt::opt_exact(kFullB2);
  CHECK(full.depth == 2);
  CHECK(full.tree.internal_nodes() == 3);
  CHECK(mhdt::validate_tree(full.tree, kFullB2));

  const mhdt::OptResult single = mhdt::opt_exact(InstanceSet::from_strings({"101"}));
  CHECK(single.depth == 0);
  CHECK(single.tree.is_leaf());

  const InstanceSet three = InstanceSet::from_strings({"000", "110", "101"});
  const mhdt::OptResult r = mhdt::opt_exact(three);
  CHECK(r.depth == 2);
  CHECK(r.tree.index() == 0);
}

TEST_CASE("exact solver limit") {
  mhdt::Rng rng(1);
  CHECK_THROWS_AS(mhdt::opt_exact(mhdt::random_instance(rng, 25, 8)), mhdt::ExactLimitExceeded);
  mhdt::Limits raised;
  raised.opt_exact_n_limit = 25;
  CHECK(mhdt::opt_exact(mhdt::random_instance(rng, 25, 6), raised).depth >= 5);
}

TEST_CASE("exact solver matches brute force") {
  mhdt::Rng rng(201);
  for (int trial = 0; trial < 300; ++trial) {
    const InstanceSet a = random_small(rng);
    CAPTURE(oracle::rows_of(a));
    const mhdt::OptResult r = mhdt::opt_exact(a);
    CHECK(r.depth == static_cast<std::size_t>(oracle::opt(oracle::rows_of(a))));
    CHECK(r.tree.depth() == r.depth);
    CHECK(mhdt::validate_tree(r.tree, a));
  }
}

TEST_CASE("optimal depth is shift invariant") {
  mhdt::Rng rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const InstanceSet a = random_small(rng);
    const BitVector h = mhdt::random_bit_vector(rng, a.width());
    const InstanceSet shifted = mhdt::xor_shift(a, h);
    const mhdt::OptResult r = mhdt::opt_exact(a);
    CHECK(mhdt::opt_exact(shifted).depth == r.depth);
    const mhdt::DecisionTree moved = mhdt::shift_tree(r.tree, h);
    CHECK(mhdt::validate_tree(moved, shifted));
  }
}

TEST_CASE("greedy tree examples") {
  const mhdt::DecisionTree t = mhdt::greedy_tree(kFullB2);
  CHECK(t.index() == 0);
  CHECK(t.depth() == 2);
  CHECK(mhdt::greedy_tree(InstanceSet::from_strings({"1"})).is_leaf());
  CHECK(mhdt::greedy_column(kFullB2, kFullB2.all_rows()) == 0);
  CHECK(mhdt::greedy_column(InstanceSet::from_strings({"00", "01", "10"}), BitVector::ones(3)) == 0);
}

TEST_CASE("greedy tree is valid and within its bounds") {
  mhdt::Rng rng(203);
  for (int trial = 0; trial < 300; ++trial) {
    const InstanceSet a = random_small(rng);
    const mhdt::DecisionTree t = mhdt::greedy_tree(a);
    CHECK(mhdt::validate_tree(t, a));
    const std::size_t opt = mhdt::opt_exact(a).depth;
    CHECK(t.depth() >= opt);
    CHECK(t.depth() <= a.size() - 1);
    if (a.size() >= 2) {
      const double den = mhdt::den_exact(a).value.to_double();
      CHECK(t.depth() <= static_cast<std::size_t>(std::ceil(den * std::log(static_cast<double>(a.size())))));
    }
  }
}

TEST_CASE("halving query bound") {
  CHECK(mhdt::halving_query_bound(0, 1) == 0.0);
  CHECK(mhdt::halving_query_bound(2, 4) == doctest::Approx(8.0));
  CHECK(mhdt::halving_query_bound(1, 8) == doctest::Approx(6.0));
  CHECK(mhdt::halving_query_bound(4, 16) == doctest::Approx(12.0));
}

TEST_CASE("moshkov learner examples") {
  mhdt::FixedOracle oracle(kFullB2, 3);
  const QueryTranscript t = mhdt::moshkov_learn(kFullB2, oracle, mhdt::exact_spec_oracle(), 2);
  CHECK(t.count() == 2);
  CHECK(*t.result == BitVector::from_string("11"));
  CHECK(static_cast<double>(t.count()) <= 2 + 2 * 2);

  const InstanceSet single = InstanceSet::from_strings({"010"});
  mhdt::FixedOracle only(single, 0);
  const QueryTranscript empty = mhdt::moshkov_learn(single, only, mhdt::exact_spec_oracle(), 0);
  CHECK(empty.count() == 0);
  CHECK(*empty.result == single.row(0));
}

TEST_CASE("moshkov learner rejects oversized specifying sets") {
  mhdt::FixedOracle oracle(kFullB2, 0);
  CHECK_THROWS_AS(mhdt::moshkov_learn(kFullB2, oracle, mhdt::exact_spec_oracle(), 1), mhdt::SpecSetTooLarge);
}

TEST_CASE("moshkov learner finds every element within the bound") {
  mhdt::Rng rng(204);
  for (int trial = 0; trial < 150; ++trial) {
    const InstanceSet a = random_small(rng);
    const std::size_t e = mhdt::etd(a).value;
    for (std::size_t row = 0; row < a.size(); ++row) {
      mhdt::FixedOracle oracle(a, row);
      const QueryTranscript t = mhdt::moshkov_learn(a, oracle, mhdt::exact_spec_oracle(), e);
      CHECK(*t.result == a.row(row));
      CHECK_FALSE(t.has_repeats());
      CHECK(static_cast<double>(t.count()) <= mhdt::halving_query_bound(e, a.size()) + 1e-9);
      for (std::size_t p = 0; p + 1 < t.phases.size(); ++p) {
        CHECK(t.phases[p].live_after * 2 <= t.phases[p].live_before);
      }
    }
  }
}

TEST_CASE("moshkov learner with greedy specifying sets") {
  mhdt::Rng rng(205);
  for (int trial = 0; trial < 100; ++trial) {
    const InstanceSet a = random_small(rng);
    const std::size_t row = rng.below(a.size());
    mhdt::FixedOracle oracle(a, row);
    const QueryTranscript t =
        mhdt::moshkov_learn(a, oracle, mhdt::greedy_spec_oracle(), std::numeric_limits<std::size_t>::max());
    CHECK(*t.result == a.row(row));
    CHECK_FALSE(t.has_repeats());
  }
}

TEST_CASE("epsilon learner examples") {
  mhdt::FixedOracle oracle(kFullB2, 1);
  const QueryTranscript t = mhdt::epsilon_learn(kFullB2, oracle, 0.25, mhdt::exact_spec_oracle(), 2);
  CHECK(indices(t) == std::vector<std::size_t>{0, 1});
  CHECK(*t.result == BitVector::from_string("01"));

  const InstanceSet single = InstanceSet::from_strings({"1"});
  mhdt::FixedOracle only(single, 0);
  CHECK(mhdt::epsilon_learn(single, only, 0.25, mhdt::exact_spec_oracle(), 0).count() == 0);
}

TEST_CASE("default epsilon") {
  CHECK(mhdt::default_epsilon(0) == 0.5);
  CHECK(mhdt::default_epsilon(2) == 0.5);
  CHECK(mhdt::default_epsilon(3) == doctest::Approx(std::log(3.0) / 3));
  CHECK(mhdt::default_epsilon(10) == doctest::Approx(std::log(10.0) / 10));
}

TEST_CASE("epsilon learner finds every element") {
  mhdt::Rng rng(206);
  for (int trial = 0; trial < 150; ++trial) {
    const InstanceSet a = random_small(rng);
    const std::size_t e = mhdt::etd(a).value;
    for (std::size_t row = 0; row < a.size(); ++row) {
      mhdt::FixedOracle oracle(a, row);
      const QueryTranscript t = mhdt::epsilon_learn(a, oracle, mhdt::default_epsilon(e), mhdt::exact_spec_oracle(), e);
      CHECK(*t.result == a.row(row));
      CHECK_FALSE(t.has_repeats());
    }
  }
}

TEST_CASE("greedy learner walks the greedy tree") {
  mhdt::FixedOracle oracle(kFullB2, 2);
  const QueryTranscript t = mhdt::greedy_learn(kFullB2, oracle);
  CHECK(t.count() == 2);
  CHECK(*t.result == BitVector::from_string("10"));

  mhdt::Rng rng(207);
  for (int trial = 0; trial < 100; ++trial) {
    const InstanceSet a = random_small(rng);
    const std::size_t row = rng.below(a.size());
    mhdt::FixedOracle o(a, row);
    const QueryTranscript g = mhdt::greedy_learn(a, o);
    CHECK(*g.result == a.row(row));
    CHECK(g.count() <= mhdt::greedy_tree(a).depth());
  }
}

TEST_CASE("adversary forces the density bound on optimal trees") {
  const mhdt::DensityResult d = mhdt::den_exact(kFullB2);
  mhdt::AdversaryOracle adversary(kFullB2, d.witness);
  const QueryTranscript t = mhdt::tree_learn(kFullB2, mhdt::opt_exact(kFullB2).tree, adversary, "exact-tree");
  CHECK(t.count() >= 2);
  CHECK(*t.result == adversary.finalize());

  mhdt::Rng rng(208);
  for (int trial = 0; trial < 200; ++trial) {
    const InstanceSet a = random_small(rng);
    const mhdt::DensityResult den = mhdt::den_exact(a);
    mhdt::AdversaryOracle adv(a, den.witness.empty() ? mhdt::IndexSet{0} : den.witness);
    const QueryTranscript g = mhdt::tree_learn(a, mhdt::opt_exact(a).tree, adv);
    CHECK(static_cast<std::int64_t>(g.count()) >= den.value.ceil());
    CHECK(*g.result == adv.finalize());
  }
}

TEST_CASE("adversary removes at most mami rows of its subset per answer") {
  mhdt::Rng rng(209);
  for (int trial = 0; trial < 200; ++trial) {
    const InstanceSet a = random_small(rng);
    mhdt::IndexSet subset;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (rng.coin()) subset.push_back(i);
    }
    if (subset.empty()) subset.push_back(0);
    BitVector mask(a.size());
    for (std::size_t i : subset) mask.set(i);
    const std::size_t limit = mhdt::mami(*a.select(mask));
    mhdt::AdversaryOracle adv(a, subset);
    std::size_t before = adv.survivors_in_subset();
    for (std::size_t j = 0; j < a.width(); ++j) {
      adv.answer(j);
      const std::size_t after = adv.survivors_in_subset();
      CHECK(before - after <= limit);
      before = after;
    }
    CHECK_NOTHROW(adv.finalize());
  }
}

TEST_CASE("adversary answers are forced when the live rows agree") {
  const InstanceSet a = InstanceSet::from_strings({"10", "01"});
  mhdt::AdversaryOracle adv(a, {0, 1});
  CHECK(adv.answers_vector() == BitVector::from_string("11"));
  CHECK(adv.answer(0));
  // Only 10 is left; answering the majority bit would rule it out.
  CHECK_FALSE(adv.answer(1));
  CHECK(adv.finalize() == BitVector::from_string("10"));
}

TEST_CASE("play_game dispatch and names") {
  CHECK(mhdt::parse_learner("greedy") == mhdt::Learner::kGreedy);
  CHECK(mhdt::parse_learner("exact-tree") == mhdt::Learner::kExactTree);
  CHECK(mhdt::learner_name(mhdt::Learner::kEpsilon) == "epsilon");
  CHECK_THROWS_AS(mhdt::parse_learner("random"), mhdt::InputError);

  for (auto learner : {mhdt::Learner::kGreedy, mhdt::Learner::kMoshkov, mhdt::Learner::kEpsilon,
                       mhdt::Learner::kExactTree}) {
    mhdt::FixedOracle oracle(kFullB2, 1);
    const QueryTranscript t = mhdt::play_game(kFullB2, learner, oracle);
    CHECK(*t.result == kFullB2.row(1));
    CHECK(t.learner == mhdt::learner_name(learner));
    CHECK(t.oracle == "hidden=2");
  }

  const InstanceSet single = InstanceSet::from_strings({"10"});
  mhdt::FixedOracle only(single, 0);
  CHECK(mhdt::play_game(single, mhdt::Learner::kGreedy, only).count() == 0);
  CHECK_THROWS_AS(mhdt::FixedOracle(single, 1), mhdt::IndexError);
}

}  // TEST_SUITE
