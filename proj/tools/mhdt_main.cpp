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


// Command-line front end: measure, solve, play, class and verify.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mhdt/disjunctions.hpp"
#include "mhdt/error.hpp"
#include "mhdt/game.hpp"
#include "mhdt/io.hpp"
#include "mhdt/measures.hpp"
#include "mhdt/report.hpp"
#include "mhdt/solvers.hpp"
#include "mhdt/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kLimitExceeded = 3 };

struct CommonOptions {
  std::string format;
  std::string output;
  mhdt::Limits limits;
  std::optional<std::size_t> sample;
  std::uint64_t seed = mhdt::VerifyConfig::kDefaultSeed;
};

void add_common(CLI::App* cmd, CommonOptions& opts, const std::string& formats) {
  cmd->add_option("--format", opts.format, "Output format (" + formats + ")");
  cmd->add_option("-o,--output", opts.output, "Write to this file instead of stdout");
  cmd->add_option("--etd-m-limit", opts.limits.etd_exact_m_limit, "Largest m for exact ETD/SETD")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--den-n-limit", opts.limits.den_exact_n_limit, "Largest n for exact DEN")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--opt-n-limit", opts.limits.opt_exact_n_limit, "Largest n for exact OPT")
      ->check(CLI::PositiveNumber);
}

std::string resolve_format(const std::string& requested, const std::string& fallback,
                           std::initializer_list<std::string_view> allowed) {
  const std::string format = requested.empty() ? fallback : requested;
  for (std::string_view f : allowed) {
    if (f == format) return format;
  }
  throw mhdt::InputError("unsupported --format '" + format + "' for this command");
}

void emit(const CommonOptions& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw mhdt::InputError("cannot write '" + opts.output + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

mhdt::InstanceSet load_matrix(const std::string& path) {
  return mhdt::parse_instance_set(mhdt::read_text_file(path));
}

int run_measure(const std::string& input, const CommonOptions& opts) {
  const std::string format = resolve_format(opts.format, "json", {"json", "text"});
  const mhdt::InstanceSet a = load_matrix(input);
  mhdt::ReportOptions ro;
  ro.limits = opts.limits;
  if (opts.sample) ro.dimension.sample = opts.sample;
  ro.dimension.seed = opts.seed;
  const mhdt::MeasuresReport r = mhdt::bounds_report(a, ro);
  emit(opts, format == "json" ? dump(mhdt::report_to_json(r)) : mhdt::report_to_text(r));
  return r.all_pass() ? kOk : kVerificationFailed;
}

int run_solve(const std::string& input, const std::string& algorithm, const CommonOptions& opts) {
  const std::string format = resolve_format(opts.format, "dot", {"dot", "json", "text"});
  const mhdt::InstanceSet a = load_matrix(input);
  std::optional<mhdt::DecisionTree> tree;
  if (algorithm == "exact") {
    tree = mhdt::opt_exact(a, opts.limits).tree;
  } else if (algorithm == "greedy") {
    tree = mhdt::greedy_tree(a);
  } else {
    throw mhdt::InputError("unknown algorithm '" + algorithm + "' (expected exact or greedy)");
  }
  std::optional<mhdt::Fraction> den;
  if (a.size() <= opts.limits.den_exact_n_limit) den = mhdt::den_exact(a, opts.limits).value;
  const std::string dot = mhdt::tree_to_dot(*tree);

  if (format == "json") {
    Json j;
    j["algorithm"] = algorithm;
    j["depth"] = tree->depth();
    j["internal_nodes"] = tree->internal_nodes();
    j["leaves"] = tree->leaves();
    j["ceil_log2n"] = mhdt::ceil_log2(a.size());
    j["den"] = den ? Json(std::to_string(den->num()) + "/" + std::to_string(den->den())) : Json(nullptr);
    j["dot"] = dot;
    emit(opts, dump(j));
  } else if (format == "text") {
    std::string text = "algorithm: " + algorithm + "\ndepth: " + std::to_string(tree->depth()) +
                       "\nceil(log2 n): " + std::to_string(mhdt::ceil_log2(a.size())) + "\n";
    if (den) text += "DEN: " + den->to_string() + "\n";
    emit(opts, text + dot);
  } else {
    emit(opts, "// " + algorithm + " tree, depth " + std::to_string(tree->depth()) + "\n" + dot);
  }
  return kOk;
}

std::unique_ptr<mhdt::AnswerOracle> make_oracle(const mhdt::InstanceSet& a, const std::string& spec,
                                                const mhdt::Limits& limits) {
  if (spec == "adversary") {
    mhdt::IndexSet witness;
    if (a.size() <= limits.den_exact_n_limit) {
      witness = mhdt::den_exact(a, limits).witness;
    } else {
      witness = mhdt::den_lower(a, 32).witness;
    }
    if (witness.empty()) witness.push_back(0);
    return std::make_unique<mhdt::AdversaryOracle>(a, std::move(witness));
  }
  const std::string prefix = "hidden=";
  if (spec.rfind(prefix, 0) == 0) {
    std::size_t row = 0;
    try {
      std::size_t used = 0;
      row = std::stoul(spec.substr(prefix.size()), &used);
      if (used != spec.size() - prefix.size()) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
      throw mhdt::InputError("bad oracle '" + spec + "': expected hidden=<row> with a 1-based row");
    }
    if (row == 0) throw mhdt::IndexError("hidden rows are numbered from 1");
    return std::make_unique<mhdt::FixedOracle>(a, row - 1);
  }
  throw mhdt::InputError("unknown oracle '" + spec + "' (expected hidden=<row> or adversary)");
}

struct PlayOptions {
  std::string learner;
  std::string oracle;
  bool greedy_spec = false;
  std::optional<double> epsilon;
  std::optional<std::size_t> e_bound;
};

int run_play(const std::string& input, const PlayOptions& play, const CommonOptions& opts) {
  const std::string format = resolve_format(opts.format, "json", {"json", "text"});
  const mhdt::InstanceSet a = load_matrix(input);
  const mhdt::Learner learner = mhdt::parse_learner(play.learner);
  auto oracle = make_oracle(a, play.oracle, opts.limits);
  mhdt::GameOptions go;
  go.limits = opts.limits;
  go.greedy_spec = play.greedy_spec;
  go.epsilon = play.epsilon;
  go.e_bound = play.e_bound;
  const mhdt::QueryTranscript t = mhdt::play_game(a, learner, *oracle, go);
  if (format == "json") {
    emit(opts, dump(mhdt::transcript_to_json(t)));
  } else {
    std::string text = t.learner + " vs " + t.oracle + ": " + std::to_string(t.count()) + " queries\n";
    for (const mhdt::Query& q : t.queries) {
      text += "  x" + std::to_string(q.index + 1) + " = " + (q.answer ? "1" : "0") + "\n";
    }
    text += "result: " + (t.result ? t.result->to_string() : std::string("unresolved")) + "\n";
    emit(opts, text);
  }
  return kOk;
}

mhdt::PredicateFamily load_family(const std::vector<std::string>& spec) {
  const auto number = [](const std::string& s) -> std::size_t {
    try {
      std::size_t used = 0;
      const std::size_t v = std::stoul(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw mhdt::InputError("expected a number, got '" + s + "'");
  };
  if (spec[0] == "ray") {
    if (spec.size() != 3) throw mhdt::InputError("usage: class ray <side> <dims> <action>");
    return mhdt::gen_ray(number(spec[1]), number(spec[2]));
  }
  if (spec[0] == "raysum") {
    if (spec.size() != 1) throw mhdt::InputError("usage: class raysum <action>");
    return mhdt::gen_ray_sum();
  }
  if (spec.size() != 1) throw mhdt::InputError("usage: class <file> <action>");
  return mhdt::parse_predicate_family(mhdt::read_text_file(spec[0]));
}

int run_class(std::vector<std::string> args, std::optional<std::size_t> hidden, const CommonOptions& opts) {
  if (args.size() < 2) throw mhdt::InputError("usage: class <ray n m | raysum | file> <hasse|matrix|etd|learn>");
  const std::string action = args.back();
  args.pop_back();
  const mhdt::PredicateFamily family = load_family(args);
  const mhdt::HasseDiagram h = mhdt::hasse_build(family.predicates);

  if (action == "hasse") {
    const std::string format = resolve_format(opts.format, "dot", {"dot", "json"});
    if (format == "dot") {
      emit(opts, mhdt::hasse_to_dot(h));
      return kOk;
    }
    Json elements = Json::array();
    for (std::size_t g = 0; g < h.size(); ++g) {
      Json down = Json::array();
      for (std::size_t d : h.descendants(g)) down.push_back(d + 1);
      elements.push_back({{"element", g + 1},
                          {"label", h.label(g)},
                          {"table", h.function(g).to_string()},
                          {"descendants", std::move(down)},
                          {"degree", h.degree(g)}});
    }
    emit(opts, dump(Json{{"size", h.size()}, {"degree", h.degree()}, {"elements", std::move(elements)}}));
    return kOk;
  }
  if (action == "matrix") {
    resolve_format(opts.format, "text", {"text"});
    emit(opts, mhdt::format_instance_set(mhdt::induced_matrix(h)));
    return kOk;
  }
  if (action == "etd") {
    const std::string format = resolve_format(opts.format, "json", {"json", "text"});
    const std::vector<mhdt::TeachingRow> table = mhdt::teaching_table(h, opts.limits);
    std::size_t best = 0;
    Json rows = Json::array();
    std::string text = "element  label  |De|  |As|  deg  HS(As^~G)  |De|+HS  witness\n";
    for (const mhdt::TeachingRow& r : table) {
      best = std::max(best, r.bound);
      const Json witness = r.witness_size ? Json(*r.witness_size) : Json(nullptr);
      rows.push_back({{"element", r.element + 1},
                      {"label", h.label(r.element)},
                      {"descendants", r.descendants},
                      {"ascendants", r.ascendants},
                      {"degree", r.degree},
                      {"ascendant_hitting", r.ascendant_hitting},
                      {"bound", r.bound},
                      {"witness_size", witness}});
      text += std::to_string(r.element + 1) + "  " + h.label(r.element) + "  " + std::to_string(r.descendants) +
              "  " + std::to_string(r.ascendants) + "  " + std::to_string(r.degree) + "  " +
              std::to_string(r.ascendant_hitting) + "  " + std::to_string(r.bound) + "  " +
              (r.witness_size ? std::to_string(*r.witness_size) : std::string("-")) + "\n";
    }
    text += "max |De|+HS: " + std::to_string(best) + "\ndegree: " + std::to_string(h.degree()) + "\n";
    if (format == "json") {
      emit(opts, dump(Json{{"size", h.size()}, {"degree", h.degree()}, {"max_bound", best}, {"rows", rows}}));
    } else {
      emit(opts, text);
    }
    return kOk;
  }
  if (action == "learn") {
    resolve_format(opts.format, "json", {"json"});
    const std::size_t element = hidden.value_or(h.size());
    if (element == 0 || element > h.size()) {
      throw mhdt::IndexError("--hidden must be in [1, " + std::to_string(h.size()) + "]");
    }
    const mhdt::InstanceSet matrix = mhdt::induced_matrix(h);
    mhdt::FixedOracle oracle(matrix, element - 1);
    const mhdt::DisjunctionLearnResult r = mhdt::learn_disjunction(h, oracle);
    Json j;
    j["hidden"] = element;
    j["hidden_label"] = h.label(element - 1);
    j["learned"] = r.element + 1;
    j["learned_label"] = h.label(r.element);
    j["identified"] = r.element + 1 == element;
    j["degree"] = h.degree();
    j["query_bound"] = mhdt::halving_query_bound(h.degree(), h.size());
    j["transcript"] = mhdt::transcript_to_json(r.transcript);
    emit(opts, dump(j));
    return r.element + 1 == element ? kOk : kVerificationFailed;
  }
  throw mhdt::InputError("unknown class action '" + action + "' (expected hasse, matrix, etd or learn)");
}

int run_verify(const mhdt::VerifyConfig& config, const CommonOptions& opts) {
  resolve_format(opts.format, "text", {"text"});
  const mhdt::VerifySummary summary = mhdt::run_verify(config);
  emit(opts, summary.text());
  return summary.pass() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-height decision trees: measures, solvers, learning games and predicate classes"};
  app.require_subcommand(1);
  CommonOptions opts;

  std::string input;
  auto* measure = app.add_subcommand("measure", "Report every measure and bound check for a matrix file");
  measure->add_option("input", input, "Matrix file")->required();
  measure->add_option("--sample", opts.sample, "Sample this many hypotheses when m exceeds the ETD limit");
  measure->add_option("--seed", opts.seed, "Seed for sampling");
  add_common(measure, opts, "json|text");

  std::string algorithm = "exact";
  auto* solve = app.add_subcommand("solve", "Build a decision tree for a matrix file");
  solve->add_option("input", input, "Matrix file")->required();
  solve->add_option("--algorithm", algorithm, "exact or greedy");
  add_common(solve, opts, "dot|json|text");

  PlayOptions play;
  auto* play_cmd = app.add_subcommand("play", "Run a learner against an answer oracle");
  play_cmd->add_option("input", input, "Matrix file")->required();
  play_cmd->add_option("--learner", play.learner, "greedy, moshkov, epsilon or exact-tree")->required();
  play_cmd->add_option("--oracle", play.oracle, "hidden=<row> (1-based) or adversary")->required();
  play_cmd->add_flag("--greedy-spec", play.greedy_spec, "Greedy instead of minimum specifying sets");
  play_cmd->add_option("--epsilon", play.epsilon, "Balance threshold for the epsilon learner");
  play_cmd->add_option("--e-bound", play.e_bound, "Specifying-set size bound (default ETD)");
  add_common(play_cmd, opts, "json|text");

  std::vector<std::string> class_args;
  std::optional<std::size_t> hidden;
  auto* class_cmd = app.add_subcommand("class", "Disjunction classes: ray <side> <dims> | raysum | <file>");
  class_cmd->add_option("args", class_args, "Class spec followed by hasse, matrix, etd or learn")->required();
  class_cmd->add_option("--hidden", hidden, "Element to learn (1-based; default: the top element)");
  add_common(class_cmd, opts, "dot|json|text");

  mhdt::VerifyConfig verify_config;
  std::optional<std::string> suite;
  bool no_exhaustive = false;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--seed", verify_config.seed, "Seed for the random corpus");
  verify->add_option("--cases", verify_config.cases, "Random corpus size");
  verify->add_option("--games", verify_config.games, "Random learner games");
  verify->add_option("--suite", suite, "Run a single suite");
  verify->add_flag("--no-exhaustive", no_exhaustive, "Skip the exhaustive small-instance corpus");
  add_common(verify, opts, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*measure) return run_measure(input, opts);
    if (*solve) return run_solve(input, algorithm, opts);
    if (*play_cmd) return run_play(input, play, opts);
    if (*class_cmd) return run_class(class_args, hidden, opts);
    verify_config.suite = suite;
    verify_config.exhaustive = !no_exhaustive;
    verify_config.limits = opts.limits;
    return run_verify(verify_config, opts);
  } catch (const mhdt::InputError& e) {
    std::cerr << "mhdt: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const mhdt::LimitError& e) {
    std::cerr << "mhdt: limit exceeded: " << e.what() << "\n";
    return kLimitExceeded;
  } catch (const std::exception& e) {
    std::cerr << "mhdt: " << e.what() << "\n";
    return kVerificationFailed;
  }
}
