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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mhdt/bit_vector.hpp"
#include "mhdt/game.hpp"
#include "mhdt/instance_set.hpp"
#include "mhdt/measures.hpp"

namespace mhdt {

/// A finite domain X: either the grid [side]^dims enumerated row-major
/// (first coordinate slowest) or `size` unstructured points.
class Domain {
 public:
  static constexpr std::size_t kDefaultMaxPoints = 4096;

  /// Throws DomainTooLarge when side^dims exceeds `max_points`.
  static Domain grid(std::size_t side, std::size_t dims, std::size_t max_points = kDefaultMaxPoints);
  static Domain points(std::size_t count, std::size_t max_points = kDefaultMaxPoints);

  std::size_t size() const { return size_; }
  bool is_grid() const { return dims_ > 0; }
  std::size_t side() const { return side_; }
  std::size_t dims() const { return dims_; }
  /// 1-based grid coordinates of point `p`.
  std::vector<std::size_t> coordinates(std::size_t p) const;
  /// "(x1,x2,...)" for grids, "p<k>" (1-based) otherwise.
  std::string point_label(std::size_t p) const;

 private:
  Domain(std::size_t side, std::size_t dims, std::size_t size) : side_(side), dims_(dims), size_(size) {}
  std::size_t side_;
  std::size_t dims_;
  std::size_t size_;
};

struct Predicate {
  std::string name;
  /// Truth table over the domain points, in domain order.
  BitVector table;
};

struct PredicateFamily {
  Domain domain;
  std::vector<Predicate> predicates;
};

/// [x_coord >= threshold] over a grid domain (1-based coord and threshold).
Predicate ray_predicate(const Domain& domain, std::size_t coord, std::size_t threshold);
/// [x_1 + ... + x_dims >= threshold + 1] over a grid domain.
Predicate ray_sum_predicate(const Domain& domain, std::size_t threshold, std::string name);

/// Single-coordinate rays [x_j >= i], i in [side], j in [dims], over
/// [side]^dims; coordinate-major order. Names are "f<j><i>".
PredicateFamily gen_ray(std::size_t side, std::size_t dims,
                        std::size_t max_points = Domain::kDefaultMaxPoints);
/// The eleven predicates f1..f3 = [x1 >= i], g1..g3 = [x2 >= i],
/// h1..h5 = [x1 + x2 >= i + 1] over {1,2,3}^2.
PredicateFamily gen_ray_sum();

/// Parses the predicate file format:
///   domain grid <side> <dims> | domain points <count>
///   <name>: <table bits>
///   ray <coord> <threshold>
///   raysum <threshold>
/// '#' starts a comment line. Throws FormatError or DomainTooLarge.
PredicateFamily parse_predicate_family(std::string_view text,
                                       std::size_t max_points = Domain::kDefaultMaxPoints);

/// Distinct truth tables of all disjunctions of subsets of `predicates`,
/// including the zero function; computed as a join fixpoint. Sorted by
/// number of ones, then by bit string. Throws DomainMismatch when table
/// widths differ and ExactLimitExceeded past `max_elements`.
std::vector<BitVector> closure(std::span<const Predicate> predicates,
                               std::size_t max_elements = std::size_t{1} << 16);

struct LatticeElement {
  BitVector function;
  /// Indices of every predicate implying `function`; their disjunction is
  /// `function`.
  IndexSet generators;
};

/// Hasse diagram of the disjunction closure under implication.
class HasseDiagram {
 public:
  std::size_t size() const { return elements_.size(); }
  std::size_t domain_size() const { return domain_size_; }
  const std::vector<LatticeElement>& elements() const { return elements_; }
  const LatticeElement& element(std::size_t g) const { return elements_[g]; }
  const BitVector& function(std::size_t g) const { return elements_[g].function; }
  const std::vector<std::string>& predicate_names() const { return names_; }

  /// Immediate descendants / ascendants, ascending element index.
  const IndexSet& descendants(std::size_t g) const { return down_[g]; }
  const IndexSet& ascendants(std::size_t g) const { return up_[g]; }
  /// All strict descendants (resp. ascendants) as a mask over elements.
  const BitVector& all_below(std::size_t g) const { return below_[g]; }
  const BitVector& all_above(std::size_t g) const { return above_[g]; }

  std::size_t degree(std::size_t g) const { return down_[g].size() + up_[g].size(); }
  /// Maximum degree over all elements.
  std::size_t degree() const;
  std::size_t top() const { return elements_.size() - 1; }
  std::size_t bottom() const { return 0; }

  std::optional<std::size_t> find(const BitVector& function) const;
  /// Generators joined with "∨", or "0" for the bottom element.
  std::string label(std::size_t g) const;

  /// Number of (G, G1 in De(G)) edges.
  std::size_t edge_count() const;

 private:
  friend HasseDiagram hasse_build(std::span<const Predicate> predicates, std::size_t max_elements);

  std::size_t domain_size_ = 0;
  std::vector<std::string> names_;
  std::vector<LatticeElement> elements_;
  std::vector<IndexSet> down_;
  std::vector<IndexSet> up_;
  std::vector<BitVector> below_;
  std::vector<BitVector> above_;
};

HasseDiagram hasse_build(std::span<const Predicate> predicates,
                         std::size_t max_elements = std::size_t{1} << 16);

/// The element whose table is the OR of the two tables.
std::size_t lca(const HasseDiagram& h, std::size_t g1, std::size_t g2);
/// The least element above (or equal to) both, found from the order alone.
std::size_t lca_by_order(const HasseDiagram& h, std::size_t g1, std::size_t g2);
/// The greatest element below (or equal to) both. Throws MultipleMaximal when
/// that set has several maximal elements.
std::size_t gcd(const HasseDiagram& h, std::size_t g1, std::size_t g2);

/// Minimum set of domain points telling `g` apart from every other element.
IndexSet witness_set_min(const HasseDiagram& h, std::size_t g, const Limits& limits = {});

/// Polynomial-time specifying set for hypothesis `hyp` (a table over X) with
/// respect to the whole class. Size is at most degree(). `exact_hitting`
/// swaps the greedy hitting set for the minimum one.
IndexSet specifying_set_poly(const HasseDiagram& h, const BitVector& hyp, bool exact_hitting = false);

/// Rows are the element tables in element order, columns the domain points.
InstanceSet induced_matrix(const HasseDiagram& h);

struct TeachingRow {
  std::size_t element;
  std::size_t descendants;
  std::size_t ascendants;
  std::size_t degree;
  /// HS({s and not G : s in As(G)})
  std::size_t ascendant_hitting;
  /// descendants + ascendant_hitting
  std::size_t bound;
  /// Minimum witness-set size; nullopt past the exact limit.
  std::optional<std::size_t> witness_size;
};

std::vector<TeachingRow> teaching_table(const HasseDiagram& h, const Limits& limits = {});

struct PropertyCount {
  std::size_t checks = 0;
  std::size_t violations = 0;
};

/// For every G, every immediate descendant G1 and every point a with
/// G1(a) = 0, G(a) = 1: all other immediate descendants of G are 1 at a.
PropertyCount check_unique_witnesses(const HasseDiagram& h);
/// For all pairs: lca equals lca_by_order; for distinct immediate
/// descendants G1, G2 of G: G1 or G2 = G.
PropertyCount check_join_lca(const HasseDiagram& h);

struct DisjunctionLearnResult {
  std::size_t element;
  QueryTranscript transcript;
};

/// The halving learner on induced_matrix(h) with specifying_set_poly as the
/// specifying-set oracle and the Hasse degree as its size bound. The oracle
/// must be committed to a row of induced_matrix(h).
DisjunctionLearnResult learn_disjunction(const HasseDiagram& h, AnswerOracle& oracle);

}  // namespace mhdt
