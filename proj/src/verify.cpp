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


#include "mhdt/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "mhdt/disjunctions.hpp"
#include "mhdt/error.hpp"
#include "mhdt/game.hpp"
#include "mhdt/random.hpp"
#include "mhdt/solvers.hpp"

namespace mhdt {
namespace {

constexpr double kFloatSlack = 1e-9;
constexpr std::size_t kMaxExamples = 3;

std::string describe(const InstanceSet& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ",";
    out += a.row(i).to_string();
  }
  return out + "}";
}

// Measures shared by several suites, computed on first use.
struct Facts {
  std::optional<OptResult> opt;
  std::optional<std::size_t> etd;
  std::optional<std::size_t> setd;
  std::optional<DensityResult> den;
};

class Corpus {
 public:
  Corpus(std::vector<InstanceSet> instances, const Limits& limits)
      : instances_(std::move(instances)), facts_(instances_.size()), limits_(limits) {}

  std::size_t size() const { return instances_.size(); }
  const InstanceSet& at(std::size_t i) const { return instances_[i]; }

  const OptResult& opt(std::size_t i) {
    if (!facts_[i].opt) facts_[i].opt = opt_exact(instances_[i], limits_);
    return *facts_[i].opt;
  }
  std::size_t etd_of(std::size_t i) {
    if (!facts_[i].etd) facts_[i].etd = etd(instances_[i], limits_).value;
    return *facts_[i].etd;
  }
  std::size_t setd_of(std::size_t i) {
    if (!facts_[i].setd) facts_[i].setd = setd(instances_[i], limits_).value;
    return *facts_[i].setd;
  }
  const DensityResult& den(std::size_t i) {
    if (!facts_[i].den) facts_[i].den = den_exact(instances_[i], limits_);
    return *facts_[i].den;
  }

 private:
  std::vector<InstanceSet> instances_;
  std::vector<Facts> facts_;
  Limits limits_;
};

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& what) {
    ++result_.checks;
    if (!ok) fail(what());
  }
  // Counts one check; an exception from `body` is a failure.
  void guarded(const std::function<bool()>& body, const std::function<std::string()>& what) {
    ++result_.checks;
    try {
      if (!body()) fail(what());
    } catch (const Error& e) {
      fail(what() + " threw: " + e.what());
    }
  }
  SuiteResult take() { return std::move(result_); }

 private:
  void fail(std::string message) {
    ++result_.failures;
    if (result_.examples.size() < kMaxExamples) result_.examples.push_back(std::move(message));
  }
  SuiteResult result_;
};

std::uint64_t suite_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a, stable across platforms
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

SuiteResult suite_sandwich(Corpus& c) {
  Recorder rec("sandwich");
  for (std::size_t i = 0; i < c.size(); ++i) {
    const InstanceSet& a = c.at(i);
    rec.guarded(
        [&] {
          const std::size_t log_n = ceil_log2(a.size());
          const std::size_t lower = std::max(c.etd_of(i), log_n);
          const OptResult& o = c.opt(i);
          return lower <= o.depth && o.depth <= a.size() - 1 && o.tree.depth() == o.depth &&
                 validate_tree(o.tree, a);
        },
        [&] { return "sandwich " + describe(a); });
  }
  return rec.take();
}

SuiteResult suite_shift(Corpus& c, std::uint64_t seed, const Limits& limits) {
  Recorder rec("shift");
  Rng rng(suite_seed(seed, "shift"));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const InstanceSet& a = c.at(i);
    const BitVector h = random_bit_vector(rng, a.width());
    rec.guarded(
        [&] {
          const InstanceSet shifted = xor_shift(a, h);
          const DecisionTree moved = shift_tree(c.opt(i).tree, h);
          return opt_exact(shifted, limits).depth == c.opt(i).depth &&
                 etd(shifted, limits).value == c.etd_of(i) && setd(shifted, limits).value == c.setd_of(i) &&
                 validate_tree(moved, shifted) && moved.depth() == c.opt(i).depth;
        },
        [&] { return "shift " + describe(a) + " by " + h.to_string(); });
  }
  return rec.take();
}

SuiteResult suite_sss(Corpus& c, std::uint64_t seed) {
  Recorder rec("sss");
  Rng rng(suite_seed(seed, "sss"));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const InstanceSet& a = c.at(i);
    const BitVector h = random_bit_vector(rng, a.width());
    rec.guarded(
        [&] {
          const std::size_t e = c.etd_of(i);
          const std::size_t s = c.setd_of(i);
          const std::size_t hs = hitting_set_min(a).size();
          const InstanceSet shifted = xor_shift(a, h);
          const IndexSet spec = specifying_set_min(a, h);
          const IndexSet strong = strong_specifying_set_min(a, h);
          const bool sizes = spec.size() <= std::min(a.width(), a.size() - 1) &&
                             strong.size() <= std::min(a.width(), a.size());
          const bool hit_bound = a.size() == 1 || hs * max_ones(a) >= a.size() - 1;
          return e <= s && s <= e + 1 && hs == setd_z(a) && setd_at(a, h) == hitting_set_min(shifted).size() &&
                 etd_at(a, h) == etd_z(shifted) && is_specifying_set(a, h, spec) &&
                 is_strong_specifying_set(a, h, strong) && sizes && hit_bound &&
                 mami(a) == mami_via_majority(a);
        },
        [&] { return "sss " + describe(a) + " at " + h.to_string(); });
  }
  return rec.take();
}

SuiteResult suite_density(Corpus& c) {
  Recorder rec("density");
  for (std::size_t i = 0; i < c.size(); ++i) {
    const InstanceSet& a = c.at(i);
    rec.guarded(
        [&] {
          const Fraction den = c.den(i).value;
          const std::size_t e = c.etd_of(i);
          const double ln_n = std::log(static_cast<double>(a.size()));
          return den <= Fraction(c.opt(i).depth) && den <= Fraction(e + 1) &&
                 static_cast<double>(e) <= ln_n * den.to_double() + 1 + kFloatSlack &&
                 den_lower(a, 2).value <= den && density_of(a, c.den(i).witness) == den;
        },
        [&] { return "density " + describe(a); });
  }
  return rec.take();
}

SuiteResult suite_greedy(Corpus& c) {
  Recorder rec("greedy");
  for (std::size_t i = 0; i < c.size(); ++i) {
    const InstanceSet& a = c.at(i);
    rec.guarded(
        [&] {
          const DecisionTree t = greedy_tree(a);
          if (!validate_tree(t, a)) return false;
          if (a.size() < 2) return t.depth() == 0;
          const double den = c.den(i).value.to_double();
          const double ln_n = std::log(static_cast<double>(a.size()));
          const auto by_density = static_cast<std::size_t>(std::ceil(den * ln_n));
          const double ratio = std::min(std::log(2.0) * den, ln_n);
          const auto by_opt =
              static_cast<std::size_t>(std::ceil(ratio * static_cast<double>(c.opt(i).depth) + kFloatSlack));
          return t.depth() <= by_density && t.depth() <= by_opt;
        },
        [&] { return "greedy " + describe(a); });
  }
  return rec.take();
}

SuiteResult suite_moshkov(Corpus& c) {
  Recorder rec("moshkov");
  const SpecOracle spec = exact_spec_oracle();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const InstanceSet& a = c.at(i);
    for (std::size_t row = 0; row < a.size(); ++row) {
      rec.guarded(
          [&] {
            const std::size_t e = c.etd_of(i);
            FixedOracle oracle(a, row);
            const QueryTranscript t = moshkov_learn(a, oracle, spec, e);
            return t.result == a.row(row) && !t.has_repeats() &&
                   static_cast<double>(t.count()) <= halving_query_bound(e, a.size()) + kFloatSlack;
          },
          [&] { return "moshkov " + describe(a) + " hidden=" + std::to_string(row + 1); });
    }
  }
  return rec.take();
}

SuiteResult suite_lemma4(Corpus& c) {
  Recorder rec("lemma4");
  for (std::size_t i = 0; i < c.size(); ++i) {
    const InstanceSet& a = c.at(i);
    rec.guarded(
        [&] {
          const DensityResult& d = c.den(i);
          IndexSet subset = d.witness.empty() ? IndexSet{0} : d.witness;
          AdversaryOracle oracle(a, subset);
          const QueryTranscript t = tree_learn(a, c.opt(i).tree, oracle, "exact-tree");
          return t.result && *t.result == oracle.finalize() &&
                 static_cast<std::int64_t>(t.count()) >= d.value.ceil();
        },
        [&] { return "lemma4 " + describe(a); });
  }
  return rec.take();
}

struct LatticeCase {
  std::string name;
  PredicateFamily family;
  std::optional<std::size_t> expected_size;
  std::optional<std::size_t> expected_degree;
  std::optional<std::size_t> degree_cap;
};

void check_lattice(Recorder& rec, const LatticeCase& lc, const Limits& limits) {
  const HasseDiagram h = hasse_build(lc.family.predicates);
  const std::string& name = lc.name;
  if (lc.expected_size) {
    rec.check(h.size() == *lc.expected_size, [&] { return name + ": closure size " + std::to_string(h.size()); });
  }
  if (lc.expected_degree) {
    rec.check(h.degree() == *lc.expected_degree, [&] { return name + ": degree " + std::to_string(h.degree()); });
  }
  if (lc.degree_cap) {
    rec.check(h.degree() <= *lc.degree_cap, [&] { return name + ": degree " + std::to_string(h.degree()); });
  }
  const PropertyCount joins = check_join_lca(h);
  rec.check(joins.violations == 0, [&] { return name + ": join/lca violations " + std::to_string(joins.violations); });
  const PropertyCount wit = check_unique_witnesses(h);
  rec.check(wit.violations == 0, [&] { return name + ": witness violations " + std::to_string(wit.violations); });
  for (std::size_t g1 = 0; g1 < h.size(); ++g1) {
    for (std::size_t g2 = 0; g2 < h.size(); ++g2) {
      rec.guarded([&] { return gcd(h, g1, g2) == gcd(h, g2, g1); },
                  [&] { return name + ": gcd " + std::to_string(g1) + "," + std::to_string(g2); });
    }
  }

  const InstanceSet matrix = induced_matrix(h);
  const std::vector<TeachingRow> table = teaching_table(h, limits);
  std::size_t table_max = 0;
  std::size_t witness_max = 0;
  for (const TeachingRow& row : table) {
    table_max = std::max(table_max, row.bound);
    if (row.witness_size) witness_max = std::max(witness_max, *row.witness_size);
  }
  rec.check(table_max <= h.degree(), [&] { return name + ": teaching bound above degree"; });

  const std::size_t x = h.domain_size();
  if (x <= 16 && x <= limits.etd_exact_m_limit) {
    rec.guarded(
        [&] {
          const std::size_t e = etd(matrix, limits).value;
          return e == table_max && e == witness_max;
        },
        [&] { return name + ": ETD differs from the teaching table maximum"; });
    bool ok = true;
    std::string bad;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << x) && ok; ++k) {
      const BitVector hyp = BitVector::from_word(x, k);
      const IndexSet greedy = specifying_set_poly(h, hyp);
      const IndexSet exact = specifying_set_poly(h, hyp, true);
      const std::size_t best = specifying_set_min(matrix, hyp).size();
      ok = is_specifying_set(matrix, hyp, greedy) && is_specifying_set(matrix, hyp, exact) &&
           greedy.size() <= h.degree() && exact.size() <= table_max && best <= exact.size();
      if (!ok) bad = hyp.to_string();
    }
    rec.check(ok, [&] { return name + ": specifying set at " + bad; });
  }

  for (std::size_t g = 0; g < h.size(); ++g) {
    rec.guarded(
        [&] {
          FixedOracle oracle(matrix, g);
          const DisjunctionLearnResult r = learn_disjunction(h, oracle);
          return r.element == g && !r.transcript.has_repeats() &&
                 static_cast<double>(r.transcript.count()) <=
                     halving_query_bound(h.degree(), h.size()) + kFloatSlack;
        },
        [&] { return name + ": learning element " + std::to_string(g); });
  }
}

SuiteResult suite_lattice(const Limits& limits) {
  Recorder rec("lattice");
  const std::vector<LatticeCase> cases = {
      {"ray 2 2", gen_ray(2, 2), 5, std::nullopt, 4},
      {"ray 3 2", gen_ray(3, 2), 10, std::nullopt, 4},
      {"ray 4 2", gen_ray(4, 2), 17, 4, 4},
      {"raysum", gen_ray_sum(), std::nullopt, std::nullopt, std::nullopt},
  };
  for (const LatticeCase& lc : cases) check_lattice(rec, lc, limits);
  return rec.take();
}

SuiteResult suite_learners(std::uint64_t seed, std::size_t games, const Limits& limits) {
  Recorder rec("learners");
  Rng rng(suite_seed(seed, "learners"));
  const Learner learners[] = {Learner::kGreedy, Learner::kMoshkov, Learner::kEpsilon, Learner::kExactTree};
  for (std::size_t g = 0; g < games; ++g) {
    const std::size_t m = rng.between(1, 8);
    const std::size_t n = rng.between(1, std::min<std::size_t>(10, std::size_t{1} << m));
    const InstanceSet a = random_instance(rng, n, m);
    const Learner learner = learners[rng.below(4)];
    GameOptions options;
    options.limits = limits;
    options.greedy_spec = rng.below(4) == 0;
    const bool adversary = rng.below(4) == 0;
    const std::size_t hidden = rng.below(n);
    IndexSet subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.coin()) subset.push_back(i);
    }
    if (subset.empty()) subset.push_back(hidden);
    rec.guarded(
        [&] {
          std::unique_ptr<AnswerOracle> oracle;
          if (adversary) {
            oracle = std::make_unique<AdversaryOracle>(a, subset);
          } else {
            oracle = std::make_unique<FixedOracle>(a, hidden);
          }
          const QueryTranscript t = play_game(a, learner, *oracle, options);
          return t.result && *t.result == oracle->finalize() && !t.has_repeats() && a.contains(*t.result);
        },
        [&] {
          return "learners " + learner_name(learner) + (adversary ? " vs adversary " : " vs hidden ") +
                 describe(a);
        });
  }
  return rec.take();
}

}  // namespace

bool VerifySummary::pass() const {
  for (const SuiteResult& s : suites) {
    if (s.failures > 0) return false;
  }
  return true;
}

std::string VerifySummary::text() const {
  std::ostringstream out;
  out << "verify seed=" << seed << " corpus=" << corpus_size << "\n";
  for (const SuiteResult& s : suites) {
    out << (s.failures == 0 ? "PASS " : "FAIL ") << s.name << " checks=" << s.checks << " failures=" << s.failures
        << "\n";
    for (const std::string& e : s.examples) out << "  " << e << "\n";
  }
  out << (pass() ? "all suites passed" : "some suites failed") << "\n";
  return out.str();
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"sandwich", "shift",  "sss",     "density", "greedy",
                                                 "moshkov",  "lemma4", "lattice", "learners"};
  return names;
}

std::vector<InstanceSet> exhaustive_corpus(std::size_t max_n, std::size_t max_m) {
  std::vector<InstanceSet> out;
  for (std::size_t m = 1; m <= max_m; ++m) {
    const std::size_t points = std::size_t{1} << m;
    for (std::size_t n = 1; n <= std::min(max_n, points); ++n) {
      std::vector<std::size_t> pick(n);
      for (std::size_t k = 0; k < n; ++k) pick[k] = k;
      while (true) {
        std::vector<BitVector> rows;
        rows.reserve(n);
        for (std::size_t k : pick) rows.push_back(BitVector::from_word(m, k));
        out.emplace_back(std::move(rows));
        // Next combination in lexicographic order.
        std::size_t k = n;
        while (k > 0 && pick[k - 1] == points - n + (k - 1)) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t j = k; j < n; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return out;
}

std::vector<InstanceSet> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n,
                                       std::size_t max_m) {
  Rng rng(seed);
  std::vector<InstanceSet> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t m = rng.between(1, max_m);
    const std::size_t cap = m >= 63 ? max_n : std::min(max_n, std::size_t{1} << m);
    const std::size_t n = rng.between(1, cap);
    out.push_back(random_instance(rng, n, m));
  }
  return out;
}

VerifySummary run_verify(const VerifyConfig& config) {
  const auto& names = verify_suite_names();
  if (config.suite && std::find(names.begin(), names.end(), *config.suite) == names.end()) {
    throw InputError("unknown suite '" + *config.suite + "'");
  }
  const auto wanted = [&](std::string_view name) { return !config.suite || *config.suite == name; };

  std::vector<InstanceSet> instances;
  if (config.exhaustive) instances = exhaustive_corpus(6, 4);
  for (InstanceSet& a : random_corpus(config.seed, config.cases)) instances.push_back(std::move(a));
  Corpus corpus(std::move(instances), config.limits);

  VerifySummary summary;
  summary.seed = config.seed;
  summary.corpus_size = corpus.size();
  if (wanted("sandwich")) summary.suites.push_back(suite_sandwich(corpus));
  if (wanted("shift")) summary.suites.push_back(suite_shift(corpus, config.seed, config.limits));
  if (wanted("sss")) summary.suites.push_back(suite_sss(corpus, config.seed));
  if (wanted("density")) summary.suites.push_back(suite_density(corpus));
  if (wanted("greedy")) summary.suites.push_back(suite_greedy(corpus));
  if (wanted("moshkov")) summary.suites.push_back(suite_moshkov(corpus));
  if (wanted("lemma4")) summary.suites.push_back(suite_lemma4(corpus));
  if (wanted("lattice")) summary.suites.push_back(suite_lattice(config.limits));
  if (wanted("learners")) summary.suites.push_back(suite_learners(config.seed, config.games, config.limits));
  return summary;
}

}  // namespace mhdt
