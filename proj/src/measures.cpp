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


#include "mhdt/measures.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>
#include <string>

#include "mhdt/error.hpp"
#include "mhdt/random.hpp"

namespace mhdt {

namespace {

using Word = BitVector::Word;

std::size_t popcount_words(const Word* w, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t k = 0; k < words; ++k) c += static_cast<std::size_t>(std::popcount(w[k]));
  return c;
}

std::size_t popcount_and(const Word* a, const Word* b, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t k = 0; k < words; ++k) c += static_cast<std::size_t>(std::popcount(a[k] & b[k]));
  return c;
}

// Finds a smallest set of coordinates that leaves at most `slack` rows
// unhit. Column masks are stored row-major by column: column j occupies
// words [j*words, (j+1)*words). Candidate sets are explored in lexicographic
// order, so the first set found at the minimum size is the lexicographically
// smallest one.
class CoverSearch {
 public:
  CoverSearch(std::vector<Word> columns, std::size_t width, std::size_t rows, std::size_t slack)
      : columns_(std::move(columns)),
        width_(width),
        rows_(rows),
        words_((rows + BitVector::kWordBits - 1) / BitVector::kWordBits),
        slack_(slack) {}

  // Counting floor: every coordinate hits at most MAX rows.
  std::size_t lower_bound() const {
    if (rows_ <= slack_) return 0;
    std::size_t max_hit = 0;
    for (std::size_t j = 0; j < width_; ++j) {
      max_hit = std::max(max_hit, popcount_words(column(j), words_));
    }
    if (max_hit == 0) return std::numeric_limits<std::size_t>::max();
    return (rows_ - slack_ + max_hit - 1) / max_hit;
  }

  // Smallest cover with size in [from, max_size], or nullopt.
  std::optional<IndexSet> solve(std::size_t from, std::size_t max_size) {
    for (std::size_t k = from; k <= max_size; ++k) {
      if (auto found = solve_exactly_within(k)) return found;
    }
    return std::nullopt;
  }

  // Some cover of size <= k, lexicographically first, or nullopt.
  std::optional<IndexSet> solve_exactly_within(std::size_t k) {
    levels_.assign((k + 1) * std::max<std::size_t>(words_, 1), 0);
    Word* top = level(0);
    for (std::size_t i = 0; i < rows_; ++i) top[i / 64] |= Word{1} << (i % 64);
    chosen_.clear();
    if (dfs(0, 0, k)) return chosen_;
    return std::nullopt;
  }

  // Greedy: most newly hit rows first, lowest index on ties.
  IndexSet greedy() const {
    std::vector<Word> unhit(std::max<std::size_t>(words_, 1), 0);
    for (std::size_t i = 0; i < rows_; ++i) unhit[i / 64] |= Word{1} << (i % 64);
    IndexSet picked;
    while (popcount_words(unhit.data(), words_) > slack_) {
      std::size_t best = width_;
      std::size_t best_hit = 0;
      for (std::size_t j = 0; j < width_; ++j) {
        const std::size_t hit = popcount_and(column(j), unhit.data(), words_);
        if (hit > best_hit) {
          best_hit = hit;
          best = j;
        }
      }
      if (best == width_) break;  // remaining rows are zero rows
      picked.push_back(best);
      const Word* c = column(best);
      for (std::size_t w = 0; w < words_; ++w) unhit[w] &= ~c[w];
    }
    std::sort(picked.begin(), picked.end());
    return picked;
  }

 private:
  const Word* column(std::size_t j) const { return columns_.data() + j * words_; }
  Word* level(std::size_t d) { return levels_.data() + d * words_; }

  bool dfs(std::size_t first, std::size_t depth, std::size_t k) {
    const Word* unhit = level(depth);
    const std::size_t open = popcount_words(unhit, words_);
    if (open <= slack_) return true;
    const std::size_t left = k - depth;
    if (left == 0) return false;
    std::size_t max_hit = 0;
    for (std::size_t j = first; j < width_; ++j) {
      max_hit = std::max(max_hit, popcount_and(column(j), unhit, words_));
    }
    if (max_hit * left < open - slack_) return false;
    Word* next = level(depth + 1);
    for (std::size_t j = first; j < width_; ++j) {
      const Word* c = column(j);
      bool hits = false;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = unhit[w] & ~c[w];
        hits |= (unhit[w] & c[w]) != 0;
      }
      if (!hits) continue;
      chosen_.push_back(j);
      if (dfs(j + 1, depth + 1, k)) return true;
      chosen_.pop_back();
      // `next` is rewritten by the following iteration; deeper levels do not
      // alias it.
    }
    return false;
  }

  std::vector<Word> columns_;
  std::size_t width_;
  std::size_t rows_;
  std::size_t words_;
  std::size_t slack_;
  std::vector<Word> levels_;
  IndexSet chosen_;
};

// Column masks of A+h over all rows of A.
std::vector<Word> shifted_columns(const InstanceSet& a, const BitVector& h) {
  const std::size_t words = a.all_rows().word_count();
  std::vector<Word> cols(a.width() * words);
  const BitVector all = a.all_rows();
  for (std::size_t j = 0; j < a.width(); ++j) {
    const auto src = a.column(j).words();
    const bool flip = h.test(j);
    for (std::size_t w = 0; w < words; ++w) {
      cols[j * words + w] = flip ? (~src[w] & all.words()[w]) : src[w];
    }
  }
  return cols;
}

// Column masks over an explicit row list (rows are vectors over `width`).
std::vector<Word> columns_of(std::span<const BitVector> rows, std::size_t width) {
  const std::size_t words = (rows.size() + 63) / 64;
  std::vector<Word> cols(width * std::max<std::size_t>(words, 1), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BitVector& r = rows[i];
    for (std::size_t j = r.find_first(); j < width; j = r.find_next(j + 1)) {
      cols[j * words + i / 64] |= Word{1} << (i % 64);
    }
  }
  return cols;
}

CoverSearch hitting_search(std::span<const BitVector> rows, std::size_t width) {
  std::vector<BitVector> nonzero;
  for (const BitVector& r : rows) {
    if (r.width() != width) throw WidthMismatch("hitting set row has the wrong width");
    if (r.any()) nonzero.push_back(r);
  }
  return CoverSearch(columns_of(nonzero, width), width, nonzero.size(), 0);
}

void check_hypothesis(const InstanceSet& a, const BitVector& h) {
  if (h.width() != a.width()) {
    throw WidthMismatch("hypothesis has width " + std::to_string(h.width()) + ", instance set has " +
                        std::to_string(a.width()));
  }
}

std::size_t column_mami(std::span<const Word> cols_low, Word mask) {
  const auto size = static_cast<std::size_t>(std::popcount(mask));
  std::size_t best = 0;
  for (Word c : cols_low) {
    const auto ones = static_cast<std::size_t>(std::popcount(c & mask));
    best = std::max(best, std::min(ones, size - ones));
  }
  return best;
}

// Lexicographic order of the sorted index sequences encoded by two masks.
bool mask_lex_less(Word s, Word t) {
  const Word diff = s ^ t;
  if (diff == 0) return false;
  const int d = std::countr_zero(diff);
  const Word above = d == 63 ? 0 : (~Word{0} << (d + 1));
  if ((s >> d) & 1U) return (t & above) != 0;
  return (s & above) == 0;
}

IndexSet mask_indices(Word mask) {
  IndexSet out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

BitVector maj(const InstanceSet& a) {
  BitVector out(a.width());
  const std::size_t n = a.size();
  for (std::size_t j = 0; j < a.width(); ++j) {
    const std::size_t ones = a.column(j).count();
    if (ones >= n - ones) out.set(j);
  }
  return out;
}

std::size_t max_ones(const InstanceSet& a) {
  std::size_t best = 0;
  for (const BitVector& c : a.columns()) best = std::max(best, c.count());
  return best;
}

std::size_t mami(const InstanceSet& a) {
  std::size_t best = 0;
  for (const BitVector& c : a.columns()) {
    const std::size_t ones = c.count();
    best = std::max(best, std::min(ones, a.size() - ones));
  }
  assert(best == mami_via_majority(a));
  return best;
}

std::size_t mami_via_majority(const InstanceSet& a) { return max_ones(xor_shift(a, maj(a))); }

IndexSet min_hitting_set(std::span<const BitVector> rows, std::size_t width) {
  CoverSearch search = hitting_search(rows, width);
  const std::size_t floor = search.lower_bound();
  const IndexSet greedy = search.greedy();
  auto found = search.solve(floor, greedy.size());
  if (!found) throw InvariantViolation("hitting set search missed the greedy solution");
  return *found;
}

IndexSet greedy_hitting_set(std::span<const BitVector> rows, std::size_t width) {
  return hitting_search(rows, width).greedy();
}

IndexSet hitting_set_min(const InstanceSet& a) { return min_hitting_set(a.rows(), a.width()); }

IndexSet hitting_set_greedy(const InstanceSet& a) { return greedy_hitting_set(a.rows(), a.width()); }

namespace {

std::size_t agreeing_rows(const InstanceSet& a, const BitVector& h, std::span<const std::size_t> s) {
  BitVector live = a.all_rows();
  for (std::size_t j : s) {
    if (j >= a.width()) throw IndexError("coordinate " + std::to_string(j + 1) + " out of range");
    if (h.test(j)) {
      live &= a.column(j);
    } else {
      live.and_not(a.column(j));
    }
  }
  return live.count();
}

}  // namespace

bool is_specifying_set(const InstanceSet& a, const BitVector& h, std::span<const std::size_t> s) {
  check_hypothesis(a, h);
  return agreeing_rows(a, h, s) <= 1;
}

bool is_strong_specifying_set(const InstanceSet& a, const BitVector& h,
                              std::span<const std::size_t> s) {
  check_hypothesis(a, h);
  return agreeing_rows(a, h, s) == (a.contains(h) ? 1U : 0U);
}

IndexSet specifying_set_min(const InstanceSet& a, const BitVector& h, std::optional<std::size_t> budget) {
  check_hypothesis(a, h);
  CoverSearch search(shifted_columns(a, h), a.width(), a.size(), 1);
  const std::size_t cap = std::min(a.width(), a.size() - 1);
  const std::size_t limit = budget ? std::min(*budget, cap) : cap;
  auto found = search.solve(std::min(search.lower_bound(), cap), limit);
  if (!found) {
    if (budget && *budget < cap) {
      throw Overbudget("no specifying set of size <= " + std::to_string(*budget));
    }
    throw InvariantViolation("specifying set search failed below min(m, n-1)");
  }
  return *found;
}

IndexSet strong_specifying_set_min(const InstanceSet& a, const BitVector& h) {
  check_hypothesis(a, h);
  return hitting_set_min(xor_shift(a, h));
}

IndexSet specifying_set_greedy(const InstanceSet& a, const BitVector& h) {
  check_hypothesis(a, h);
  return CoverSearch(shifted_columns(a, h), a.width(), a.size(), 1).greedy();
}

std::size_t etd_at(const InstanceSet& a, const BitVector& h) { return specifying_set_min(a, h).size(); }

std::size_t setd_at(const InstanceSet& a, const BitVector& h) {
  return strong_specifying_set_min(a, h).size();
}

std::size_t etd_z(const InstanceSet& a) { return etd_at(a, BitVector(a.width())); }

std::size_t setd_z(const InstanceSet& a) { return setd_at(a, BitVector(a.width())); }

namespace {

enum class Dimension { kPlain, kStrong };

std::vector<BitVector> hypotheses_for(const InstanceSet& a, const Limits& limits,
                                      const DimensionOptions& opts, bool& sampled) {
  const std::size_t m = a.width();
  std::vector<BitVector> hs;
  const std::size_t exact_cap = std::min<std::size_t>(limits.etd_exact_m_limit, 30);
  if (m <= exact_cap) {
    sampled = false;
    hs.reserve(std::size_t{1} << m);
    for (Word k = 0; k < (Word{1} << m); ++k) hs.push_back(BitVector::from_word(m, k));
    return hs;
  }
  if (!opts.sample) {
    throw ExactLimitExceeded("exact ETD/SETD needs m <= " + std::to_string(exact_cap) + ", got m = " +
                             std::to_string(m));
  }
  sampled = true;
  hs.push_back(maj(a));
  for (const BitVector& r : a.rows()) hs.push_back(r);
  Rng rng(opts.seed);
  for (std::size_t i = 0; i < *opts.sample; ++i) hs.push_back(random_bit_vector(rng, m));
  return hs;
}

DimensionResult max_dimension(const InstanceSet& a, const Limits& limits, const DimensionOptions& opts,
                              Dimension kind) {
  bool sampled = false;
  const std::vector<BitVector> hs = hypotheses_for(a, limits, opts, sampled);
  DimensionResult result{0, hs.front(), sampled};
  bool first = true;
  for (const BitVector& h : hs) {
    std::optional<CoverSearch> search;
    std::size_t cap = 0;
    if (kind == Dimension::kPlain) {
      search.emplace(shifted_columns(a, h), a.width(), a.size(), 1);
      cap = std::min(a.width(), a.size() - 1);
    } else {
      std::vector<BitVector> shifted;
      shifted.reserve(a.size());
      for (const BitVector& r : a.rows()) shifted.push_back(r ^ h);
      search.emplace(hitting_search(shifted, a.width()));
      cap = std::min(a.width(), a.size());
    }
    // Only hypotheses that beat the running maximum matter: one bounded
    // search settles the common case.
    if (!first && search->solve_exactly_within(result.value)) continue;
    const std::size_t from = first ? std::min(search->lower_bound(), cap) : result.value + 1;
    auto found = search->solve(from, cap);
    if (!found) throw InvariantViolation("specifying set search exceeded its trivial bound");
    if (first || found->size() > result.value) {
      result.value = found->size();
      result.argmax = h;
    }
    first = false;
  }
  return result;
}

}  // namespace

DimensionResult etd(const InstanceSet& a, const Limits& limits, const DimensionOptions& opts) {
  return max_dimension(a, limits, opts, Dimension::kPlain);
}

DimensionResult setd(const InstanceSet& a, const Limits& limits, const DimensionOptions& opts) {
  return max_dimension(a, limits, opts, Dimension::kStrong);
}

Fraction density_of(const InstanceSet& a, std::span<const std::size_t> rows) {
  if (rows.size() < 2) return Fraction(0);
  BitVector mask(a.size());
  for (std::size_t i : rows) mask.set(i);
  const std::size_t size = mask.count();
  std::size_t best = 0;
  for (const BitVector& c : a.columns()) {
    const std::size_t ones = (c & mask).count();
    best = std::max(best, std::min(ones, size - ones));
  }
  return Fraction(static_cast<std::int64_t>(size - 1), static_cast<std::int64_t>(best));
}

DensityResult den_exact(const InstanceSet& a, const Limits& limits) {
  const std::size_t n = a.size();
  const std::size_t cap = std::min<std::size_t>(limits.den_exact_n_limit, 40);
  if (n > cap) {
    throw ExactLimitExceeded("exact DEN needs n <= " + std::to_string(cap) + ", got n = " +
                             std::to_string(n));
  }
  if (n == 1) return {Fraction(0), {}};
  std::vector<Word> cols;
  cols.reserve(a.width());
  for (const BitVector& c : a.columns()) cols.push_back(c.low_word());
  Fraction best(0);
  Word best_mask = 0;
  const Word end = Word{1} << n;
  for (Word mask = 3; mask < end; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < 2) continue;
    const std::size_t mm = column_mami(cols, mask);
    const Fraction value(static_cast<std::int64_t>(size - 1), static_cast<std::int64_t>(mm));
    if (value > best || (value == best && mask_lex_less(mask, best_mask))) {
      best = value;
      best_mask = mask;
    }
  }
  return {best, mask_indices(best_mask)};
}

namespace {

Fraction density_of_mask(const InstanceSet& a, const BitVector& mask) {
  const std::size_t size = mask.count();
  if (size < 2) return Fraction(0);
  std::size_t best = 0;
  for (const BitVector& c : a.columns()) {
    const std::size_t ones = (c & mask).count();
    best = std::max(best, std::min(ones, size - ones));
  }
  return Fraction(static_cast<std::int64_t>(size - 1), static_cast<std::int64_t>(best));
}

void hill_climb(const InstanceSet& a, BitVector& current, Fraction& value) {
  while (true) {
    std::size_t best_row = a.size();
    Fraction best_value = value;
    std::size_t best_size = current.count();
    for (std::size_t i = 0; i < a.size(); ++i) {
      current.flip(i);
      const std::size_t size = current.count();
      if (size >= 2) {
        const Fraction v = density_of_mask(a, current);
        if (v > best_value || (v == best_value && size > best_size)) {
          best_value = v;
          best_size = size;
          best_row = i;
        }
      }
      current.flip(i);
    }
    if (best_row == a.size()) return;
    current.flip(best_row);
    value = best_value;
  }
}

}  // namespace

DensityResult den_lower(const InstanceSet& a, std::size_t effort) {
  if (a.size() == 1) return {Fraction(0), {}};
  BitVector best_mask = a.all_rows();
  Fraction best = density_of_mask(a, best_mask);
  hill_climb(a, best_mask, best);
  Rng rng(0x6a09e667f3bcc908ULL);
  for (std::size_t r = 0; r < effort; ++r) {
    BitVector start(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (rng.coin()) start.set(i);
    }
    while (start.count() < 2) start.set(rng.below(a.size()));
    Fraction value = density_of_mask(a, start);
    hill_climb(a, start, value);
    if (value > best) {
      best = value;
      best_mask = start;
    }
  }
  return {best, best_mask.set_bits()};
}

}  // namespace mhdt
