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


#include "mhdt/disjunctions.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "mhdt/error.hpp"

namespace mhdt {

Domain Domain::grid(std::size_t side, std::size_t dims, std::size_t max_points) {
  if (side == 0 || dims == 0) throw FormatError("grid domain needs side >= 1 and dims >= 1");
  std::size_t size = 1;
  for (std::size_t k = 0; k < dims; ++k) {
    if (size > max_points / side) {
      throw DomainTooLarge("grid domain [" + std::to_string(side) + "]^" + std::to_string(dims) +
                           " exceeds " + std::to_string(max_points) + " points");
    }
    size *= side;
  }
  return Domain(side, dims, size);
}

Domain Domain::points(std::size_t count, std::size_t max_points) {
  if (count == 0) throw FormatError("domain needs at least one point");
  if (count > max_points) {
    throw DomainTooLarge("domain of " + std::to_string(count) + " points exceeds " + std::to_string(max_points));
  }
  return Domain(0, 0, count);
}

std::vector<std::size_t> Domain::coordinates(std::size_t p) const {
  std::vector<std::size_t> xs(dims_);
  for (std::size_t k = dims_; k-- > 0;) {
    xs[k] = p % side_ + 1;
    p /= side_;
  }
  return xs;
}

std::string Domain::point_label(std::size_t p) const {
  if (!is_grid()) return "p" + std::to_string(p + 1);
  std::string out = "(";
  const auto xs = coordinates(p);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(xs[k]);
  }
  return out + ")";
}

namespace {

void require_grid(const Domain& d) {
  if (!d.is_grid()) throw FormatError("ray predicates need a grid domain");
}

std::string ray_name(std::size_t coord, std::size_t threshold) {
  if (coord < 10 && threshold < 10) return "f" + std::to_string(coord) + std::to_string(threshold);
  return "f" + std::to_string(coord) + "_" + std::to_string(threshold);
}

}  // namespace

Predicate ray_predicate(const Domain& domain, std::size_t coord, std::size_t threshold) {
  require_grid(domain);
  if (coord == 0 || coord > domain.dims()) {
    throw FormatError("ray coordinate " + std::to_string(coord) + " out of range");
  }
  BitVector table(domain.size());
  for (std::size_t p = 0; p < domain.size(); ++p) {
    if (domain.coordinates(p)[coord - 1] >= threshold) table.set(p);
  }
  return {ray_name(coord, threshold), std::move(table)};
}

Predicate ray_sum_predicate(const Domain& domain, std::size_t threshold, std::string name) {
  require_grid(domain);
  BitVector table(domain.size());
  for (std::size_t p = 0; p < domain.size(); ++p) {
    std::size_t sum = 0;
    for (std::size_t x : domain.coordinates(p)) sum += x;
    if (sum >= threshold + 1) table.set(p);
  }
  return {std::move(name), std::move(table)};
}

PredicateFamily gen_ray(std::size_t side, std::size_t dims, std::size_t max_points) {
  if (side < 1) throw FormatError("ray class needs side >= 1");
  PredicateFamily family{Domain::grid(side, dims, max_points), {}};
  for (std::size_t j = 1; j <= dims; ++j) {
    for (std::size_t i = 1; i <= side; ++i) family.predicates.push_back(ray_predicate(family.domain, j, i));
  }
  return family;
}

PredicateFamily gen_ray_sum() {
  PredicateFamily family{Domain::grid(3, 2), {}};
  for (std::size_t i = 1; i <= 3; ++i) {
    Predicate p = ray_predicate(family.domain, 1, i);
    p.name = "f" + std::to_string(i);
    family.predicates.push_back(std::move(p));
  }
  for (std::size_t i = 1; i <= 3; ++i) {
    Predicate p = ray_predicate(family.domain, 2, i);
    p.name = "g" + std::to_string(i);
    family.predicates.push_back(std::move(p));
  }
  for (std::size_t i = 1; i <= 5; ++i) {
    family.predicates.push_back(ray_sum_predicate(family.domain, i, "h" + std::to_string(i)));
  }
  return family;
}

namespace {

std::size_t parse_count(const std::string& token, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw FormatError("line " + std::to_string(line_no) + ": expected a number, got '" + token + "'");
  }
  return value;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

PredicateFamily parse_predicate_family(std::string_view text, std::size_t max_points) {
  std::optional<Domain> domain;
  std::vector<Predicate> predicates;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto where = [&] { return "line " + std::to_string(line_no) + ": "; };

    if (const auto colon = line.find(':'); colon != std::string::npos) {
      if (!domain) throw FormatError(where() + "predicate before the domain header");
      const std::string name = trim(std::string_view(line).substr(0, colon));
      const std::string bits = trim(std::string_view(line).substr(colon + 1));
      if (name.empty()) throw FormatError(where() + "empty predicate name");
      if (bits.size() != domain->size()) {
        throw FormatError(where() + "table has " + std::to_string(bits.size()) + " entries, domain has " +
                          std::to_string(domain->size()));
      }
      predicates.push_back({name, BitVector::from_string(bits)});
      continue;
    }

    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok[0] == "domain") {
      if (domain) throw FormatError(where() + "duplicate domain header");
      if (tok.size() == 4 && tok[1] == "grid") {
        domain = Domain::grid(parse_count(tok[2], line_no), parse_count(tok[3], line_no), max_points);
      } else if (tok.size() == 3 && tok[1] == "points") {
        domain = Domain::points(parse_count(tok[2], line_no), max_points);
      } else {
        throw FormatError(where() + "expected 'domain grid <side> <dims>' or 'domain points <count>'");
      }
    } else if (tok[0] == "ray" && tok.size() == 3) {
      if (!domain) throw FormatError(where() + "ray before the domain header");
      predicates.push_back(ray_predicate(*domain, parse_count(tok[1], line_no), parse_count(tok[2], line_no)));
    } else if (tok[0] == "raysum" && tok.size() == 2) {
      if (!domain) throw FormatError(where() + "raysum before the domain header");
      const std::size_t i = parse_count(tok[1], line_no);
      predicates.push_back(ray_sum_predicate(*domain, i, "h" + std::to_string(i)));
    } else {
      throw FormatError(where() + "unrecognized line '" + line + "'");
    }
  }
  if (!domain) throw FormatError("missing domain header");
  return {*domain, std::move(predicates)};
}

std::vector<BitVector> closure(std::span<const Predicate> predicates, std::size_t max_elements) {
  if (predicates.empty()) throw FormatError("closure needs at least one predicate");
  const std::size_t width = predicates.front().table.width();
  for (const Predicate& p : predicates) {
    if (p.table.width() != width) {
      throw DomainMismatch("predicate '" + p.name + "' has " + std::to_string(p.table.width()) +
                           " points, expected " + std::to_string(width));
    }
  }
  std::unordered_set<BitVector, BitVectorHash> seen;
  std::vector<BitVector> elements;
  auto add = [&](BitVector v) {
    if (seen.insert(v).second) {
      if (elements.size() == max_elements) {
        throw ExactLimitExceeded("closure exceeds " + std::to_string(max_elements) + " elements");
      }
      elements.push_back(std::move(v));
    }
  };
  add(BitVector(width));
  for (const Predicate& p : predicates) add(p.table);
  // Every subset join is reached by adding one predicate at a time.
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const Predicate& p : predicates) add(elements[k] | p.table);
  }
  std::sort(elements.begin(), elements.end(), [](const BitVector& x, const BitVector& y) {
    const std::size_t cx = x.count();
    const std::size_t cy = y.count();
    return cx != cy ? cx < cy : x < y;
  });
  return elements;
}

HasseDiagram hasse_build(std::span<const Predicate> predicates, std::size_t max_elements) {
  HasseDiagram h;
  std::vector<BitVector> tables = closure(predicates, max_elements);
  const std::size_t n = tables.size();
  h.domain_size_ = tables.front().width();
  for (const Predicate& p : predicates) h.names_.push_back(p.name);
  for (BitVector& t : tables) {
    IndexSet gens;
    for (std::size_t f = 0; f < predicates.size(); ++f) {
      if (predicates[f].table.is_subset_of(t)) gens.push_back(f);
    }
    h.elements_.push_back({std::move(t), std::move(gens)});
  }

  // Elements are sorted by popcount, so strict implication only points to
  // higher indices.
  h.below_.assign(n, BitVector(n));
  h.above_.assign(n, BitVector(n));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      if (h.elements_[u].function.is_subset_of(h.elements_[v].function)) {
        h.below_[v].set(u);
        h.above_[u].set(v);
      }
    }
  }
  h.down_.assign(n, {});
  h.up_.assign(n, {});
  for (std::size_t v = 0; v < n; ++v) {
    BitVector covered(n);
    const BitVector& below = h.below_[v];
    for (std::size_t w = below.find_first(); w < n; w = below.find_next(w + 1)) covered |= h.below_[w];
    BitVector immediate = below;
    immediate.and_not(covered);
    for (std::size_t u = immediate.find_first(); u < n; u = immediate.find_next(u + 1)) {
      h.down_[v].push_back(u);
      h.up_[u].push_back(v);
    }
  }
  for (IndexSet& ups : h.up_) std::sort(ups.begin(), ups.end());
  return h;
}

std::size_t HasseDiagram::degree() const {
  std::size_t best = 0;
  for (std::size_t g = 0; g < size(); ++g) best = std::max(best, degree(g));
  return best;
}

std::optional<std::size_t> HasseDiagram::find(const BitVector& function) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), function,
                                   [](const LatticeElement& e, const BitVector& f) {
                                     const std::size_t ce = e.function.count();
                                     const std::size_t cf = f.count();
                                     return ce != cf ? ce < cf : e.function < f;
                                   });
  if (it != elements_.end() && it->function == function) {
    return static_cast<std::size_t>(it - elements_.begin());
  }
  return std::nullopt;
}

std::string HasseDiagram::label(std::size_t g) const {
  const IndexSet& gens = elements_[g].generators;
  if (gens.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k > 0) out += "∨";
    out += names_[gens[k]];
  }
  return out;
}

std::size_t HasseDiagram::edge_count() const {
  std::size_t total = 0;
  for (const IndexSet& d : down_) total += d.size();
  return total;
}

std::size_t lca(const HasseDiagram& h, std::size_t g1, std::size_t g2) {
  const auto found = h.find(h.function(g1) | h.function(g2));
  if (!found) throw InvariantViolation("join of two elements is missing from the closure");
  return *found;
}

namespace {

BitVector with_self(const BitVector& mask, std::size_t g) {
  BitVector out = mask;
  out.set(g);
  return out;
}

}  // namespace

std::size_t lca_by_order(const HasseDiagram& h, std::size_t g1, std::size_t g2) {
  const BitVector common = with_self(h.all_above(g1), g1) & with_self(h.all_above(g2), g2);
  std::optional<std::size_t> least;
  for (std::size_t g = common.find_first(); g < h.size(); g = common.find_next(g + 1)) {
    // Minimal: nothing else in `common` lies strictly below g.
    if ((h.all_below(g) & common).none()) {
      if (least) throw MultipleMaximal("common ascendants have several minimal elements");
      least = g;
    }
  }
  if (!least) throw InvariantViolation("no common ascendant");
  return *least;
}

std::size_t gcd(const HasseDiagram& h, std::size_t g1, std::size_t g2) {
  const BitVector common = with_self(h.all_below(g1), g1) & with_self(h.all_below(g2), g2);
  std::optional<std::size_t> greatest;
  for (std::size_t g = common.find_first(); g < h.size(); g = common.find_next(g + 1)) {
    if ((h.all_above(g) & common).none()) {
      if (greatest) throw MultipleMaximal("common descendants have several maximal elements");
      greatest = g;
    }
  }
  if (!greatest) throw InvariantViolation("no common descendant");
  return *greatest;
}

IndexSet witness_set_min(const HasseDiagram& h, std::size_t g, const Limits& limits) {
  if (h.domain_size() > limits.witness_exact_x_limit) {
    throw ExactLimitExceeded("exact witness sets need |X| <= " + std::to_string(limits.witness_exact_x_limit));
  }
  std::vector<BitVector> rows;
  rows.reserve(h.size());
  for (std::size_t other = 0; other < h.size(); ++other) {
    if (other != g) rows.push_back(h.function(other) ^ h.function(g));
  }
  return min_hitting_set(rows, h.domain_size());
}

IndexSet specifying_set_poly(const HasseDiagram& h, const BitVector& hyp, bool exact_hitting) {
  if (hyp.width() != h.domain_size()) {
    throw WidthMismatch("hypothesis has " + std::to_string(hyp.width()) + " points, domain has " +
                        std::to_string(h.domain_size()));
  }
  const BitVector& top = h.function(h.top());
  if (!hyp.is_subset_of(top)) {
    BitVector outside = hyp;
    outside.and_not(top);
    return {outside.find_first()};
  }
  // Descend while some immediate descendant is still implied by hyp.
  std::size_t g = h.top();
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t d : h.descendants(g)) {
      if (hyp.is_subset_of(h.function(d))) {
        g = d;
        moved = true;
        break;
      }
    }
  }
  IndexSet points;
  for (std::size_t d : h.descendants(g)) {
    BitVector witness = hyp;
    witness.and_not(h.function(d));
    points.push_back(witness.find_first());
  }
  std::vector<BitVector> above;
  for (std::size_t s : h.ascendants(g)) {
    BitVector row = h.function(s);
    row.and_not(h.function(g));
    above.push_back(std::move(row));
  }
  const IndexSet hitting = exact_hitting ? min_hitting_set(above, h.domain_size())
                                         : greedy_hitting_set(above, h.domain_size());
  points.insert(points.end(), hitting.begin(), hitting.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

InstanceSet induced_matrix(const HasseDiagram& h) {
  std::vector<BitVector> rows;
  rows.reserve(h.size());
  for (const LatticeElement& e : h.elements()) rows.push_back(e.function);
  return InstanceSet(std::move(rows));
}

std::vector<TeachingRow> teaching_table(const HasseDiagram& h, const Limits& limits) {
  std::vector<TeachingRow> table;
  table.reserve(h.size());
  const bool witnesses = h.domain_size() <= limits.witness_exact_x_limit;
  for (std::size_t g = 0; g < h.size(); ++g) {
    std::vector<BitVector> above;
    for (std::size_t s : h.ascendants(g)) {
      BitVector row = h.function(s);
      row.and_not(h.function(g));
      above.push_back(std::move(row));
    }
    const std::size_t hs = min_hitting_set(above, h.domain_size()).size();
    TeachingRow row{g, h.descendants(g).size(), h.ascendants(g).size(), h.degree(g), hs,
                    h.descendants(g).size() + hs, std::nullopt};
    if (witnesses) row.witness_size = witness_set_min(h, g, limits).size();
    table.push_back(row);
  }
  return table;
}

PropertyCount check_unique_witnesses(const HasseDiagram& h) {
  PropertyCount count;
  for (std::size_t g = 0; g < h.size(); ++g) {
    const IndexSet& de = h.descendants(g);
    for (std::size_t d : de) {
      BitVector witnesses = h.function(g);
      witnesses.and_not(h.function(d));
      for (std::size_t a = witnesses.find_first(); a < witnesses.width(); a = witnesses.find_next(a + 1)) {
        for (std::size_t other : de) {
          if (other == d) continue;
          ++count.checks;
          if (!h.function(other).test(a)) ++count.violations;
        }
      }
    }
  }
  return count;
}

PropertyCount check_join_lca(const HasseDiagram& h) {
  PropertyCount count;
  for (std::size_t g1 = 0; g1 < h.size(); ++g1) {
    for (std::size_t g2 = g1; g2 < h.size(); ++g2) {
      ++count.checks;
      if (lca(h, g1, g2) != lca_by_order(h, g1, g2)) ++count.violations;
    }
  }
  for (std::size_t g = 0; g < h.size(); ++g) {
    const IndexSet& de = h.descendants(g);
    for (std::size_t x = 0; x < de.size(); ++x) {
      for (std::size_t y = x + 1; y < de.size(); ++y) {
        ++count.checks;
        if ((h.function(de[x]) | h.function(de[y])) != h.function(g)) ++count.violations;
      }
    }
  }
  return count;
}

DisjunctionLearnResult learn_disjunction(const HasseDiagram& h, AnswerOracle& oracle) {
  const InstanceSet matrix = induced_matrix(h);
  const SpecOracle spec = [&h](const InstanceSet&, const BitVector& hyp) {
    return specifying_set_poly(h, hyp);
  };
  QueryTranscript t = moshkov_learn(matrix, oracle, spec, h.degree());
  t.learner = "moshkov-hasse";
  if (!t.result) throw InvariantViolation("learner finished without a result");
  const auto element = h.find(*t.result);
  if (!element) throw InvariantViolation("learner result is not an element of the class");
  return {*element, std::move(t)};
}

}  // namespace mhdt
