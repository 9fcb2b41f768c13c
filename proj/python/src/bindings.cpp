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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mhdt/disjunctions.hpp"
#include "mhdt/error.hpp"
#include "mhdt/game.hpp"
#include "mhdt/io.hpp"
#include "mhdt/measures.hpp"
#include "mhdt/report.hpp"
#include "mhdt/solvers.hpp"
#include "mhdt/verify.hpp"

namespace py = pybind11;

namespace {

using mhdt::BitVector;
using mhdt::InstanceSet;

InstanceSet from_rows(const std::vector<std::string>& rows) {
  const std::vector<std::string_view> views(rows.begin(), rows.end());
  return InstanceSet::from_strings(views);
}

std::vector<std::string> to_rows(const InstanceSet& a) {
  std::vector<std::string> out;
  for (const BitVector& r : a.rows()) out.push_back(r.to_string());
  return out;
}

BitVector hypothesis(const InstanceSet& a, const std::string& h) {
  const BitVector v = BitVector::from_string(h);
  if (v.width() != a.width()) throw mhdt::WidthMismatch("hypothesis width differs from the instance width");
  return v;
}

std::unique_ptr<mhdt::AnswerOracle> make_oracle(const InstanceSet& a, std::optional<std::size_t> hidden) {
  if (hidden) {
    if (*hidden >= a.size()) throw mhdt::IndexError("hidden row out of range");
    return std::make_unique<mhdt::FixedOracle>(a, *hidden);
  }
  mhdt::IndexSet witness =
      a.size() <= mhdt::Limits{}.den_exact_n_limit ? mhdt::den_exact(a).witness : mhdt::den_lower(a, 32).witness;
  if (witness.empty()) witness.push_back(0);
  return std::make_unique<mhdt::AdversaryOracle>(a, std::move(witness));
}

}  // namespace

PYBIND11_MODULE(_mhdt, m) {
  m.doc() = "Minimum-height decision trees for binary instance sets";

  auto base = py::register_exception<mhdt::Error>(m, "MhdtError", PyExc_RuntimeError);
  auto input = py::register_exception<mhdt::InputError>(m, "InputError", base.ptr());
  py::register_exception<mhdt::LimitError>(m, "LimitError", base.ptr());
  (void)input;

  py::class_<InstanceSet>(m, "InstanceSet")
      .def(py::init(&from_rows), py::arg("rows"))
      .def_static("parse", [](const std::string& text) { return mhdt::parse_instance_set(text); })
      .def_property_readonly("n", &InstanceSet::size)
      .def_property_readonly("m", &InstanceSet::width)
      .def_property_readonly("rows", &to_rows)
      .def("__len__", &InstanceSet::size)
      .def("__eq__", [](const InstanceSet& a, const InstanceSet& b) { return a == b; })
      .def("format", &mhdt::format_instance_set)
      .def("xor_shift", [](const InstanceSet& a, const std::string& h) { return mhdt::xor_shift(a, hypothesis(a, h)); })
      .def("__repr__", [](const InstanceSet& a) {
        std::string out = "InstanceSet([";
        for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", '" : "'") + a.row(i).to_string() + "'";
        return out + "])";
      });

  m.def("maj", [](const InstanceSet& a) { return mhdt::maj(a).to_string(); });
  m.def("mami", &mhdt::mami);
  m.def("hitting_set", &mhdt::hitting_set_min);
  m.def("etd", [](const InstanceSet& a) { return mhdt::etd(a).value; });
  m.def("setd", [](const InstanceSet& a) { return mhdt::setd(a).value; });
  m.def("etd_at", [](const InstanceSet& a, const std::string& h) { return mhdt::etd_at(a, hypothesis(a, h)); });
  m.def("setd_at", [](const InstanceSet& a, const std::string& h) { return mhdt::setd_at(a, hypothesis(a, h)); });
  m.def(
      "den",
      [](const InstanceSet& a) {
        const mhdt::DensityResult d = mhdt::den_exact(a);
        return std::make_tuple(d.value.num(), d.value.den(), d.witness);
      },
      "DEN as (numerator, denominator, witness rows)");
  m.def("opt", [](const InstanceSet& a) { return mhdt::opt_exact(a).depth; });
  m.def("_report_json", [](const InstanceSet& a) { return mhdt::report_to_json(mhdt::bounds_report(a)).dump(); });

  m.def(
      "solve",
      [](const InstanceSet& a, const std::string& algorithm) {
        mhdt::DecisionTree tree = [&] {
          if (algorithm == "exact") return mhdt::opt_exact(a).tree;
          if (algorithm == "greedy") return mhdt::greedy_tree(a);
          throw mhdt::InputError("unknown algorithm '" + algorithm + "' (expected exact or greedy)");
        }();
        return std::make_tuple(tree.depth(), mhdt::tree_to_dot(tree));
      },
      py::arg("a"), py::arg("algorithm") = "exact", "Build a tree; returns (depth, dot)");

  m.def(
      "_play_json",
      [](const InstanceSet& a, const std::string& learner, std::optional<std::size_t> hidden, bool greedy_spec) {
        mhdt::GameOptions options;
        options.greedy_spec = greedy_spec;
        const auto oracle = make_oracle(a, hidden);
        return mhdt::transcript_to_json(mhdt::play_game(a, mhdt::parse_learner(learner), *oracle, options)).dump();
      },
      py::arg("a"), py::arg("learner"), py::arg("hidden") = std::nullopt, py::arg("greedy_spec") = false);

  py::class_<mhdt::HasseDiagram>(m, "Lattice")
      .def_static(
          "ray", [](std::size_t n, std::size_t dims) { return mhdt::hasse_build(mhdt::gen_ray(n, dims).predicates); },
          py::arg("n"), py::arg("m"))
      .def_static("ray_sum", [] { return mhdt::hasse_build(mhdt::gen_ray_sum().predicates); })
      .def_static("parse", [](const std::string& text) {
        return mhdt::hasse_build(mhdt::parse_predicate_family(text).predicates);
      })
      .def("__len__", &mhdt::HasseDiagram::size)
      .def_property_readonly("domain_size", &mhdt::HasseDiagram::domain_size)
      .def("degree", py::overload_cast<>(&mhdt::HasseDiagram::degree, py::const_))
      .def("element_degree", py::overload_cast<std::size_t>(&mhdt::HasseDiagram::degree, py::const_))
      .def("label", &mhdt::HasseDiagram::label)
      .def("table", [](const mhdt::HasseDiagram& h, std::size_t g) { return h.function(g).to_string(); })
      .def("descendants", &mhdt::HasseDiagram::descendants)
      .def("ascendants", &mhdt::HasseDiagram::ascendants)
      .def("lca", [](const mhdt::HasseDiagram& h, std::size_t a, std::size_t b) { return mhdt::lca(h, a, b); })
      .def("gcd", [](const mhdt::HasseDiagram& h, std::size_t a, std::size_t b) { return mhdt::gcd(h, a, b); })
      .def("matrix", &mhdt::induced_matrix)
      .def("dot", &mhdt::hasse_to_dot)
      .def(
          "learn",
          [](const mhdt::HasseDiagram& h, std::size_t hidden) {
            const InstanceSet matrix = mhdt::induced_matrix(h);
            if (hidden >= matrix.size()) throw mhdt::IndexError("hidden element out of range");
            mhdt::FixedOracle oracle(matrix, hidden);
            const mhdt::DisjunctionLearnResult r = mhdt::learn_disjunction(h, oracle);
            return std::make_tuple(r.element, mhdt::transcript_to_json(r.transcript).dump());
          },
          py::arg("hidden"), "Learn a hidden element; returns (element, transcript json)");

  m.def(
      "verify",
      [](std::uint64_t seed, std::size_t cases, std::size_t games, std::optional<std::string> suite) {
        mhdt::VerifyConfig config;
        config.seed = seed;
        config.cases = cases;
        config.games = games;
        config.suite = std::move(suite);
        const mhdt::VerifySummary s = mhdt::run_verify(config);
        return std::make_tuple(s.pass(), s.text());
      },
      py::arg("seed") = mhdt::VerifyConfig::kDefaultSeed, py::arg("cases") = 5000, py::arg("games") = 10000,
      py::arg("suite") = std::nullopt);
}
