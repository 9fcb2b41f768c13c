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

#include "doctest.h"
#include "mhdt/error.hpp"
#include "mhdt/measures.hpp"
#include "mhdt/random.hpp"
#include "oracles.hpp"

using mhdt::BitVector;
using mhdt::Fraction;
using mhdt::IndexSet;
using mhdt::InstanceSet;

namespace {

const InstanceSet kFullB2 = InstanceSet::from_strings({"00", "01", "10", "11"});
const InstanceSet kThree = InstanceSet::from_strings({"000", "110", "101"});

BitVector bits(const char* s) { return BitVector::from_string(s); }

InstanceSet random_small(mhdt::Rng& rng, std::size_t max_n = 10, std::size_t max_m = 7) {
  const std::size_t m = rng.between(1, max_m);
  const std::size_t n = rng.between(1, std::min<std::size_t>(max_n, std::size_t{1} << m));
  return mhdt::random_instance(rng, n, m);
}

}  // namespace

TEST_SUITE("measures") {

TEST_CASE("majority") {
  CHECK(mhdt::maj(InstanceSet::from_strings({"110", "101", "011"})) == bits("111"));
  CHECK(mhdt::maj(InstanceSet::from_strings({"00"})) == bits("00"));
  CHECK(mhdt::maj(InstanceSet::from_strings({"0", "1"})) == bits("1"));
}

TEST_CASE("max and mami") {
  CHECK(mhdt::max_ones(InstanceSet::from_strings({"110", "101", "011"})) == 2);
  CHECK(mhdt::max_ones(InstanceSet::from_strings({"000"})) == 0);
  CHECK(mhdt::max_ones(kFullB2) == 2);
  CHECK(mhdt::mami(kFullB2) == 2);
  CHECK(mhdt::mami(InstanceSet::from_strings({"00", "01", "10"})) == 1);
  CHECK(mhdt::mami(InstanceSet::from_strings({"0110"})) == 0);
}

TEST_CASE("hitting sets") {
  const InstanceSet a = InstanceSet::from_strings({"100", "010", "110"});
  CHECK(mhdt::hitting_set_min(a) == IndexSet{0, 1});
  CHECK(mhdt::hitting_set_greedy(a) == IndexSet{0, 1});
  CHECK(mhdt::hitting_set_min(InstanceSet::from_strings({"000"})).empty());
  CHECK(mhdt::hitting_set_min(InstanceSet::from_strings({"111"})) == IndexSet{0});
  CHECK(mhdt::hitting_set_greedy(InstanceSet::from_strings({"111"})) == IndexSet{0});
}

TEST_CASE("greedy hitting set can be larger than the minimum") {
  // Column 0 hits the most rows, but columns 1 and 2 alone cover everything.
  const std::vector<BitVector> rows = {bits("110"), bits("110"), bits("101"), bits("101"), bits("010"), bits("001")};
  CHECK(mhdt::min_hitting_set(rows, 3) == IndexSet{1, 2});
  CHECK(mhdt::greedy_hitting_set(rows, 3).size() == 3);
}

TEST_CASE("minimum hitting set is the lexicographically smallest") {
  const std::vector<BitVector> rows = {bits("1100"), bits("0011")};
  CHECK(mhdt::min_hitting_set(rows, 4) == IndexSet{0, 2});
}

TEST_CASE("specifying sets") {
  CHECK(mhdt::specifying_set_min(kThree, bits("000")) == IndexSet{0});
  CHECK(mhdt::specifying_set_min(InstanceSet::from_strings({"0101"}), bits("1111")).empty());
  for (const char* h : {"00", "01", "10", "11"}) CHECK(mhdt::specifying_set_min(kFullB2, bits(h)).size() == 2);
  CHECK(mhdt::strong_specifying_set_min(kThree, bits("000")) == IndexSet{0});
  CHECK(mhdt::strong_specifying_set_min(kThree, bits("100")).size() == 3);
  CHECK(mhdt::strong_specifying_set_min(InstanceSet::from_strings({"0", "1"}), bits("0")) == IndexSet{0});
  CHECK_THROWS_AS(mhdt::specifying_set_min(kFullB2, bits("00"), 1), mhdt::Overbudget);
  CHECK(mhdt::specifying_set_min(kFullB2, bits("00"), 2).size() == 2);
}

TEST_CASE("etd examples") {
  CHECK(mhdt::etd(kFullB2).value == 2);
  CHECK(mhdt::etd(kThree).value == 2);
  CHECK(mhdt::etd(InstanceSet::from_strings({"1011"})).value == 0);
  CHECK(mhdt::setd(kFullB2).value == 2);
}

TEST_CASE("etd limit and sampling") {
  mhdt::Rng rng(3);
  const InstanceSet wide = mhdt::random_instance(rng, 6, 20);
  CHECK_THROWS_AS(mhdt::etd(wide), mhdt::ExactLimitExceeded);
  const mhdt::DimensionResult sampled = mhdt::etd(wide, {}, {.sample = 50, .seed = 9});
  CHECK(sampled.sampled);
  CHECK(sampled.value <= 5);
  CHECK(mhdt::etd_at(wide, sampled.argmax) == sampled.value);
  mhdt::Limits raised;
  raised.etd_exact_m_limit = 20;
  CHECK(mhdt::etd(wide, raised).value >= sampled.value);
}

TEST_CASE("density examples") {
  const mhdt::DensityResult full = mhdt::den_exact(kFullB2);
  CHECK(full.value == Fraction(2));
  CHECK(full.witness == IndexSet{0, 1, 2});
  CHECK(mhdt::den_exact(InstanceSet::from_strings({"0", "1"})).value == Fraction(1));
  const mhdt::DensityResult single = mhdt::den_exact(InstanceSet::from_strings({"01"}));
  CHECK(single.value == Fraction(0));
  CHECK(single.witness.empty());
  CHECK(mhdt::den_exact(kThree).value == Fraction(2));
  CHECK(mhdt::den_lower(kFullB2, 0).value >= Fraction(3, 2));
  CHECK(mhdt::den_lower(InstanceSet::from_strings({"01"}), 4).value == Fraction(0));
  CHECK(mhdt::density_of(kFullB2, IndexSet{0, 1, 2, 3}) == Fraction(3, 2));
}

TEST_CASE("density limit") {
  mhdt::Rng rng(4);
  const InstanceSet big = mhdt::random_instance(rng, 21, 8);
  CHECK_THROWS_AS(mhdt::den_exact(big), mhdt::ExactLimitExceeded);
}

TEST_CASE("measures agree with brute force") {
  mhdt::Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const InstanceSet a = random_small(rng);
    const oracle::Rows rows = oracle::rows_of(a);
    CAPTURE(rows);
    CHECK(mhdt::etd(a).value == static_cast<std::size_t>(oracle::etd(rows)));
    CHECK(mhdt::setd(a).value == static_cast<std::size_t>(oracle::setd(rows)));
    CHECK(mhdt::hitting_set_min(a).size() == static_cast<std::size_t>(oracle::hitting_set(rows)));
    CHECK(mhdt::mami(a) == static_cast<std::size_t>(oracle::mami(rows)));
    const auto [num, den] = oracle::den(rows);
    CHECK(mhdt::den_exact(a).value == Fraction(num, den));
    const BitVector h = mhdt::random_bit_vector(rng, a.width());
    CHECK(mhdt::etd_at(a, h) == static_cast<std::size_t>(oracle::etd_at(rows, h.to_string())));
    CHECK(mhdt::setd_at(a, h) == static_cast<std::size_t>(oracle::setd_at(rows, h.to_string())));
  }
}

TEST_CASE("argmax attains the maximum") {
  mhdt::Rng rng(102);
  for (int trial = 0; trial < 100; ++trial) {
    const InstanceSet a = random_small(rng);
    const mhdt::DimensionResult e = mhdt::etd(a);
    CHECK(mhdt::etd_at(a, e.argmax) == e.value);
    const mhdt::DimensionResult s = mhdt::setd(a);
    CHECK(mhdt::setd_at(a, s.argmax) == s.value);
    const mhdt::DensityResult d = mhdt::den_exact(a);
    CHECK(mhdt::density_of(a, d.witness) == d.value);
  }
}

TEST_CASE("specifying set results are valid and small") {
  mhdt::Rng rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    const InstanceSet a = random_small(rng);
    const BitVector h = mhdt::random_bit_vector(rng, a.width());
    const IndexSet s = mhdt::specifying_set_min(a, h);
    const IndexSet strong = mhdt::strong_specifying_set_min(a, h);
    const IndexSet greedy = mhdt::specifying_set_greedy(a, h);
    CHECK(mhdt::is_specifying_set(a, h, s));
    CHECK(mhdt::is_strong_specifying_set(a, h, strong));
    CHECK(mhdt::is_specifying_set(a, h, greedy));
    CHECK(s.size() <= std::min(a.width(), a.size() - 1));
    CHECK(strong.size() <= std::min(a.width(), a.size()));
    CHECK(s.size() <= greedy.size());
    CHECK(std::is_sorted(s.begin(), s.end()));
  }
}

TEST_CASE("shift identities") {
  mhdt::Rng rng(104);
  for (int trial = 0; trial < 200; ++trial) {
    const InstanceSet a = random_small(rng);
    const BitVector h = mhdt::random_bit_vector(rng, a.width());
    const InstanceSet shifted = mhdt::xor_shift(a, h);
    CHECK(mhdt::etd_at(a, h) == mhdt::etd_z(shifted));
    CHECK(mhdt::setd_at(a, h) == mhdt::setd_z(shifted));
    CHECK(mhdt::setd_at(a, h) == mhdt::hitting_set_min(shifted).size());
    CHECK(mhdt::etd(a).value == mhdt::etd(shifted).value);
    CHECK(mhdt::setd(a).value == mhdt::setd(shifted).value);
    CHECK(mhdt::mami(a) == mhdt::mami(shifted));
  }
}

TEST_CASE("structural inequalities") {
  mhdt::Rng rng(105);
  for (int trial = 0; trial < 300; ++trial) {
    const InstanceSet a = random_small(rng);
    const std::size_t e = mhdt::etd(a).value;
    const std::size_t s = mhdt::setd(a).value;
    const std::size_t hs = mhdt::hitting_set_min(a).size();
    CHECK(e <= s);
    CHECK(s <= e + 1);
    CHECK(hs == mhdt::setd_z(a));
    CHECK(mhdt::hitting_set_greedy(a).size() >= hs);
    if (a.size() > 1) CHECK(hs * mhdt::max_ones(a) >= a.size() - 1);
    CHECK(mhdt::mami(a) == mhdt::mami_via_majority(a));
    const Fraction den = mhdt::den_exact(a).value;
    CHECK(den <= Fraction(e + 1));
    CHECK(static_cast<double>(e) <= std::log(static_cast<double>(a.size())) * den.to_double() + 1 + 1e-9);
    CHECK(mhdt::den_lower(a, 3).value <= den);
  }
}

TEST_CASE("etd and setd are monotone under taking subsets") {
  mhdt::Rng rng(106);
  for (int trial = 0; trial < 150; ++trial) {
    const InstanceSet a = random_small(rng);
    BitVector mask(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mask.set(i, rng.coin());
    if (mask.none()) mask.set(0);
    const InstanceSet b = *a.select(mask);
    CHECK(mhdt::etd(b).value <= mhdt::etd(a).value);
    CHECK(mhdt::setd(b).value <= mhdt::setd(a).value);
  }
}

}  // TEST_SUITE
