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


#include <set>

#include "doctest.h"
#include "mhdt/disjunctions.hpp"
#include "mhdt/error.hpp"
#include "mhdt/io.hpp"
#include "mhdt/random.hpp"

using mhdt::BitVector;
using mhdt::HasseDiagram;
using mhdt::IndexSet;

namespace {

// Disjunctions of every subset of predicates, as bit strings.
std::set<std::string> brute_closure(const std::vector<mhdt::Predicate>& preds) {
  std::set<std::string> out;
  const std::size_t width = preds[0].table.width();
  for (std::uint32_t mask = 0; mask < (1u << preds.size()); ++mask) {
    BitVector v(width);
    for (std::size_t f = 0; f < preds.size(); ++f) {
      if (mask >> f & 1u) v |= preds[f].table;
    }
    out.insert(v.to_string());
  }
  return out;
}

// Number of elements covering or covered by g, from the definition.
std::size_t brute_degree(const HasseDiagram& h, std::size_t g) {
  const auto below = [&](std::size_t u, std::size_t v) {
    return u != v && h.function(u).is_subset_of(h.function(v));
  };
  const auto covers = [&](std::size_t u, std::size_t v) {
    if (!below(u, v)) return false;
    for (std::size_t w = 0; w < h.size(); ++w) {
      if (below(u, w) && below(w, v)) return false;
    }
    return true;
  };
  std::size_t deg = 0;
  for (std::size_t o = 0; o < h.size(); ++o) deg += covers(o, g) || covers(g, o);
  return deg;
}

std::optional<std::size_t> find_label(const HasseDiagram& h, const std::string& label) {
  for (std::size_t g = 0; g < h.size(); ++g) {
    if (h.label(g) == label) return g;
  }
  return std::nullopt;
}

std::vector<mhdt::PredicateFamily> reference_families() {
  return {mhdt::gen_ray(2, 2), mhdt::gen_ray(3, 2), mhdt::gen_ray(4, 2), mhdt::gen_ray(3, 1),
          mhdt::gen_ray(2, 3), mhdt::gen_ray_sum()};
}

}  // namespace

TEST_SUITE("disjunctions") {

TEST_CASE("domains") {
  const mhdt::Domain d = mhdt::Domain::grid(3, 2);
  CHECK(d.size() == 9);
  CHECK(d.coordinates(0) == std::vector<std::size_t>{1, 1});
  CHECK(d.coordinates(1) == std::vector<std::size_t>{1, 2});
  CHECK(d.coordinates(3) == std::vector<std::size_t>{2, 1});
  CHECK(d.point_label(8) == "(3,3)");
  CHECK(mhdt::Domain::points(4).point_label(0) == "p1");
  CHECK_THROWS_AS(mhdt::Domain::grid(10, 4), mhdt::DomainTooLarge);
  CHECK_THROWS_AS(mhdt::Domain::points(5000), mhdt::DomainTooLarge);
}

TEST_CASE("ray predicates") {
  const mhdt::PredicateFamily f = mhdt::gen_ray(2, 2);
  REQUIRE(f.predicates.size() == 4);
  CHECK(f.predicates[0].name == "f11");
  CHECK(f.predicates[0].table.to_string() == "1111");
  CHECK(f.predicates[1].name == "f12");
  CHECK(f.predicates[1].table.to_string() == "0011");
  CHECK(f.predicates[3].name == "f22");
  CHECK(f.predicates[3].table.to_string() == "0101");

  const mhdt::PredicateFamily rs = mhdt::gen_ray_sum();
  CHECK(rs.predicates.size() == 11);
  CHECK(rs.predicates.back().name == "h5");
  // x1 + x2 >= 6 only at (3,3).
  CHECK(rs.predicates.back().table.to_string() == "000000001");
  CHECK(mhdt::gen_ray(12, 1).predicates[10].name == "f1_11");
}

TEST_CASE("closure of the 2x2 ray class has five elements") {
  const mhdt::PredicateFamily f = mhdt::gen_ray(2, 2);
  const std::vector<BitVector> c = mhdt::closure(f.predicates);
  CHECK(c.size() == 5);
  CHECK(c.front().none());
  CHECK(c.back().count() == 4);
}

TEST_CASE("closure of small families") {
  const mhdt::Domain d = mhdt::Domain::points(3);
  const std::vector<mhdt::Predicate> one = {{"p", BitVector::from_string("011")}};
  const std::vector<BitVector> c = mhdt::closure(one);
  REQUIRE(c.size() == 2);
  CHECK(c[0].none());
  CHECK(c[1] == one[0].table);
  CHECK(mhdt::closure(mhdt::gen_ray(3, 1).predicates).size() == 4);

  const std::vector<mhdt::Predicate> mixed = {{"p", BitVector::from_string("01")}, {"q", BitVector::from_string("011")}};
  CHECK_THROWS_AS(mhdt::closure(mixed), mhdt::DomainMismatch);
  CHECK_THROWS_AS(mhdt::closure(mhdt::gen_ray(4, 2).predicates, 5), mhdt::ExactLimitExceeded);
}

TEST_CASE("closure matches subset enumeration") {
  for (const auto& f : reference_families()) {
    const std::vector<BitVector> c = mhdt::closure(f.predicates);
    std::set<std::string> got;
    for (const BitVector& v : c) got.insert(v.to_string());
    CHECK(got.size() == c.size());
    CHECK(got == brute_closure(f.predicates));
  }
}

TEST_CASE("ray class closure sizes") {
  for (std::size_t side = 1; side <= 4; ++side) {
    for (std::size_t dims = 1; dims <= 3; ++dims) {
      std::size_t expected = 1;
      for (std::size_t k = 0; k < dims; ++k) expected *= side;
      CHECK(mhdt::closure(mhdt::gen_ray(side, dims).predicates).size() == expected + 1);
    }
  }
}

TEST_CASE("hasse diagram of the 2x2 ray class") {
  const HasseDiagram h = mhdt::hasse_build(mhdt::gen_ray(2, 2).predicates);
  REQUIRE(h.size() == 5);
  const auto join = find_label(h, "f12∨f22");
  const auto f12 = find_label(h, "f12");
  const auto f22 = find_label(h, "f22");
  REQUIRE(join);
  REQUIRE(f12);
  REQUIRE(f22);
  CHECK(h.descendants(*join) == IndexSet{*f12, *f22});
  CHECK(h.ascendants(*join) == IndexSet{h.top()});
  CHECK(h.descendants(*f12) == IndexSet{h.bottom()});
  CHECK(h.degree(*join) == 3);
  CHECK(h.degree() == 3);
  CHECK(h.label(h.bottom()) == "0");
  CHECK(h.label(h.top()) == "f11∨f12∨f21∨f22");
  CHECK(h.edge_count() == 5);
}

TEST_CASE("hasse degree of the 4x4 ray class") {
  CHECK(mhdt::hasse_build(mhdt::gen_ray(4, 2).predicates).degree() == 4);
}

TEST_CASE("single predicate gives a two-element chain") {
  const std::vector<mhdt::Predicate> one = {{"p", BitVector::from_string("0110")}};
  const HasseDiagram h = mhdt::hasse_build(one);
  REQUIRE(h.size() == 2);
  CHECK(h.degree(0) == 1);
  CHECK(h.degree(1) == 1);
  CHECK(h.label(1) == "p");
}

TEST_CASE("hasse degrees match the cover relation") {
  for (const auto& f : reference_families()) {
    const HasseDiagram h = mhdt::hasse_build(f.predicates);
    for (std::size_t g = 0; g < h.size(); ++g) CHECK(h.degree(g) == brute_degree(h, g));
    for (std::size_t g = 0; g < h.size(); ++g) {
      for (std::size_t d : h.descendants(g)) CHECK(h.function(d).is_subset_of(h.function(g)));
    }
  }
}

TEST_CASE("lattice operations") {
  for (const auto& f : reference_families()) {
    const HasseDiagram h = mhdt::hasse_build(f.predicates);
    for (std::size_t g1 = 0; g1 < h.size(); ++g1) {
      for (std::size_t g2 = 0; g2 < h.size(); ++g2) {
        const std::size_t l = mhdt::lca(h, g1, g2);
        CHECK(h.function(l) == (h.function(g1) | h.function(g2)));
        CHECK(mhdt::lca_by_order(h, g1, g2) == l);
        const std::size_t d = mhdt::gcd(h, g1, g2);
        CHECK(h.function(d).is_subset_of(h.function(g1) & h.function(g2)));
        for (std::size_t o = 0; o < h.size(); ++o) {
          if (h.function(o).is_subset_of(h.function(g1)) && h.function(o).is_subset_of(h.function(g2))) {
            CHECK(h.function(o).is_subset_of(h.function(d)));
          }
        }
      }
    }
    CHECK(mhdt::check_join_lca(h).violations == 0);
    CHECK(mhdt::check_unique_witnesses(h).violations == 0);
    // A chain has no element with two descendants, so there is nothing to check.
    if (f.domain.dims() >= 2) CHECK(mhdt::check_unique_witnesses(h).checks > 0);
  }
}

TEST_CASE("witness sets") {
  for (const auto& f : reference_families()) {
    const HasseDiagram h = mhdt::hasse_build(f.predicates);
    for (std::size_t g = 0; g < h.size(); ++g) {
      const IndexSet w = mhdt::witness_set_min(h, g);
      for (std::size_t o = 0; o < h.size(); ++o) {
        if (o == g) continue;
        bool separated = false;
        for (std::size_t x : w) separated = separated || h.function(o).test(x) != h.function(g).test(x);
        CHECK(separated);
      }
    }
  }
  mhdt::Limits tight;
  tight.witness_exact_x_limit = 3;
  CHECK_THROWS_AS(mhdt::witness_set_min(mhdt::hasse_build(mhdt::gen_ray(2, 2).predicates), 0, tight),
                  mhdt::ExactLimitExceeded);
}

TEST_CASE("polynomial specifying sets") {
  // Point 0 of Ray_2^2 is (1,1), where only the top element is 1.
  const HasseDiagram h = mhdt::hasse_build(mhdt::gen_ray(2, 2).predicates);
  const mhdt::InstanceSet matrix = mhdt::induced_matrix(h);
  CHECK(matrix.size() == 5);
  CHECK(matrix.width() == 4);

  // Outside the top element: a single point suffices.
  const std::vector<mhdt::Predicate> one = {{"p", BitVector::from_string("0110")}};
  const HasseDiagram chain = mhdt::hasse_build(one);
  CHECK(mhdt::specifying_set_poly(chain, BitVector::from_string("1000")) == IndexSet{0});

  const std::vector<mhdt::Predicate> zero = {{"z", BitVector::from_string("000")}};
  const HasseDiagram trivial = mhdt::hasse_build(zero);
  REQUIRE(trivial.size() == 1);
  CHECK(mhdt::specifying_set_poly(trivial, BitVector::from_string("000")).empty());

  for (const auto& f : reference_families()) {
    const HasseDiagram hd = mhdt::hasse_build(f.predicates);
    const mhdt::InstanceSet m = mhdt::induced_matrix(hd);
    mhdt::Rng rng(301);
    for (int trial = 0; trial < 200; ++trial) {
      const BitVector hyp = mhdt::random_bit_vector(rng, hd.domain_size());
      const IndexSet s = mhdt::specifying_set_poly(hd, hyp);
      CHECK(mhdt::is_specifying_set(m, hyp, s));
      CHECK(s.size() <= hd.degree());
    }
    for (std::size_t g = 0; g < hd.size(); ++g) {
      const IndexSet s = mhdt::specifying_set_poly(hd, hd.function(g), true);
      CHECK(mhdt::is_specifying_set(m, hd.function(g), s));
    }
  }
}

TEST_CASE("teaching table") {
  const HasseDiagram h = mhdt::hasse_build(mhdt::gen_ray(4, 2).predicates);
  const std::vector<mhdt::TeachingRow> table = mhdt::teaching_table(h);
  REQUIRE(table.size() == 17);
  std::size_t max_degree = 0;
  std::size_t max_bound = 0;
  for (const auto& row : table) {
    max_degree = std::max(max_degree, row.degree);
    max_bound = std::max(max_bound, row.bound);
    CHECK(row.bound == row.descendants + row.ascendant_hitting);
    CHECK(row.bound <= row.degree);
    REQUIRE(row.witness_size);
    CHECK(*row.witness_size == row.bound);
  }
  CHECK(max_degree == 4);
  CHECK(mhdt::etd(mhdt::induced_matrix(h)).value == max_bound);
}

TEST_CASE("learning disjunctions") {
  const HasseDiagram h = mhdt::hasse_build(mhdt::gen_ray(2, 2).predicates);
  const mhdt::InstanceSet matrix = mhdt::induced_matrix(h);
  const std::size_t join = *find_label(h, "f12∨f22");
  mhdt::FixedOracle oracle(matrix, join);
  const mhdt::DisjunctionLearnResult r = mhdt::learn_disjunction(h, oracle);
  CHECK(r.element == join);
  CHECK(static_cast<double>(r.transcript.count()) <= mhdt::halving_query_bound(3, 5) + 1e-9);

  for (const auto& f : reference_families()) {
    const HasseDiagram hd = mhdt::hasse_build(f.predicates);
    const mhdt::InstanceSet m = mhdt::induced_matrix(hd);
    for (std::size_t g = 0; g < hd.size(); ++g) {
      mhdt::FixedOracle o(m, g);
      const mhdt::DisjunctionLearnResult lr = mhdt::learn_disjunction(hd, o);
      CHECK(lr.element == g);
      CHECK_FALSE(lr.transcript.has_repeats());
      CHECK(static_cast<double>(lr.transcript.count()) <= mhdt::halving_query_bound(hd.degree(), hd.size()) + 1e-9);
    }
  }

  const std::vector<mhdt::Predicate> zero = {{"z", BitVector::from_string("00")}};
  const HasseDiagram trivial = mhdt::hasse_build(zero);
  const mhdt::InstanceSet tm = mhdt::induced_matrix(trivial);
  mhdt::FixedOracle only(tm, 0);
  CHECK(mhdt::learn_disjunction(trivial, only).transcript.count() == 0);
}

TEST_CASE("predicate file parsing") {
  const mhdt::PredicateFamily f = mhdt::parse_predicate_family(
      "# rays and a custom table\n"
      "domain grid 2 2\n"
      "ray 1 2\n"
      "raysum 3\n"
      "corner: 1000\n");
  REQUIRE(f.predicates.size() == 3);
  CHECK(f.predicates[0].name == "f12");
  CHECK(f.predicates[0].table.to_string() == "0011");
  CHECK(f.predicates[1].name == "h3");
  CHECK(f.predicates[1].table.to_string() == "0001");
  CHECK(f.predicates[2].name == "corner");

  const mhdt::PredicateFamily p = mhdt::parse_predicate_family("domain points 3\np: 010\n");
  CHECK_FALSE(p.domain.is_grid());
  CHECK(mhdt::format_instance_set(mhdt::induced_matrix(mhdt::hasse_build(p.predicates))) == "2 3\n000\n010\n");

  CHECK_THROWS_AS(mhdt::parse_predicate_family("p: 01\n"), mhdt::FormatError);
  CHECK_THROWS_AS(mhdt::parse_predicate_family("domain points 3\np: 01\n"), mhdt::FormatError);
  CHECK_THROWS_AS(mhdt::parse_predicate_family("domain points 3\nray 1 1\n"), mhdt::FormatError);
  CHECK_THROWS_AS(mhdt::parse_predicate_family("domain grid 2 2\nray 3 1\n"), mhdt::FormatError);
  CHECK_THROWS_AS(mhdt::parse_predicate_family("domain grid 2 2\nbogus\n"), mhdt::FormatError);
  CHECK_THROWS_AS(mhdt::parse_predicate_family("domain grid 100 3\n"), mhdt::DomainTooLarge);
  CHECK_THROWS_AS(mhdt::parse_predicate_family("# nothing\n"), mhdt::FormatError);
}

TEST_CASE("hasse DOT") {
  const HasseDiagram h = mhdt::hasse_build(mhdt::gen_ray(2, 2).predicates);
  const std::string dot = mhdt::hasse_to_dot(h);
  CHECK(dot.find("label=\"f12∨f22\"") != std::string::npos);
  std::size_t nodes = 0;
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  for (std::size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(nodes == 5);
  CHECK(edges == 5);
}

}  // TEST_SUITE
