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


#include "mhdt/report.hpp"

#include <cmath>
#include <sstream>

#include "mhdt/error.hpp"
#include "mhdt/solvers.hpp"

namespace mhdt {
namespace {

// Slack for comparisons against bounds that involve logarithms.
constexpr double kFloatSlack = 1e-9;

std::string real(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

std::string fraction_text(const Fraction& f) {
  return std::to_string(f.num()) + "/" + std::to_string(f.den());
}

class FlagSink {
 public:
  explicit FlagSink(MeasuresReport& r) : r_(r) {}

  void add(std::string name, std::string lhs, std::string rhs, bool pass) {
    r_.flags.push_back({std::move(name), std::move(lhs), std::move(rhs), pass});
  }
  void le(std::string name, std::size_t lhs, std::size_t rhs) {
    add(std::move(name), std::to_string(lhs), std::to_string(rhs), lhs <= rhs);
  }
  void eq(std::string name, std::size_t lhs, std::size_t rhs) {
    add(std::move(name), std::to_string(lhs), std::to_string(rhs), lhs == rhs);
  }
  void skip(std::string name) { r_.skipped_flags.push_back(std::move(name)); }

 private:
  MeasuresReport& r_;
};

}  // namespace

bool MeasuresReport::all_pass() const {
  for (const BoundFlag& f : flags) {
    if (!f.pass) return false;
  }
  return true;
}

double lbo2_bound(std::size_t etd, std::size_t n) {
  const double e = static_cast<double>(etd);
  const double log_n = std::log2(static_cast<double>(n));
  if (etd <= 1) return static_cast<double>(n - 1);
  if (etd == 2) return 2 * e * log_n / std::log2(std::max(e, 2.0));
  return e + e / std::log2(e) * log_n;
}

MeasuresReport bounds_report(const InstanceSet& a, const ReportOptions& options) {
  MeasuresReport r;
  r.n = a.size();
  r.m = a.width();
  r.maj = maj(a).to_string();
  r.max = max_ones(a);
  r.mami = mami(a);
  r.etd_z = etd_z(a);
  r.setd_z = setd_z(a);
  r.hs = hitting_set_min(a).size();
  r.hs_greedy = hitting_set_greedy(a).size();
  r.log2n = std::log2(static_cast<double>(r.n));
  r.ceil_log2n = ceil_log2(r.n);
  r.greedy_depth = greedy_tree(a).depth();

  try {
    const DimensionResult e = etd(a, options.limits, options.dimension);
    r.etd = e.value;
    r.etd_sampled = e.sampled;
  } catch (const LimitError& err) {
    r.notes.push_back(std::string("etd: ") + err.what());
  }
  try {
    const DimensionResult s = setd(a, options.limits, options.dimension);
    r.setd = s.value;
    r.setd_sampled = s.sampled;
  } catch (const LimitError& err) {
    r.notes.push_back(std::string("setd: ") + err.what());
  }
  try {
    DensityResult d = den_exact(a, options.limits);
    r.den = d.value;
    r.den_witness = std::move(d.witness);
  } catch (const LimitError& err) {
    r.notes.push_back(std::string("den: ") + err.what() + "; reporting a lower bound");
    DensityResult d = den_lower(a, options.den_effort);
    r.den = d.value;
    r.den_witness = std::move(d.witness);
    r.den_exact = false;
  }
  try {
    r.opt = opt_exact(a, options.limits).depth;
  } catch (const LimitError& err) {
    r.notes.push_back(std::string("opt: ") + err.what());
  }

  const bool etd_exact = r.etd && !r.etd_sampled;
  const bool setd_exact = r.setd && !r.setd_sampled;
  if (etd_exact) r.lbo2_bound = lbo2_bound(*r.etd, r.n);

  FlagSink flags(r);
  const double ln_n = std::log(static_cast<double>(r.n));

  if (r.opt) {
    flags.le("log2n_le_opt", r.ceil_log2n, *r.opt);
    flags.le("opt_le_n_minus_1", *r.opt, r.n - 1);
  } else {
    flags.skip("log2n_le_opt");
    flags.skip("opt_le_n_minus_1");
  }
  // A sampled ETD is a lower bound, which keeps ETD <= OPT meaningful.
  if (r.opt && r.etd) {
    flags.le("etd_le_opt", *r.etd, *r.opt);
  } else {
    flags.skip("etd_le_opt");
  }
  if (r.opt && r.lbo2_bound) {
    flags.add("opt_le_lbo2_bound", std::to_string(*r.opt), real(*r.lbo2_bound),
              static_cast<double>(*r.opt) <= *r.lbo2_bound + kFloatSlack);
  } else {
    flags.skip("opt_le_lbo2_bound");
  }
  if (etd_exact && setd_exact) {
    flags.le("etd_le_setd", *r.etd, *r.setd);
    flags.le("setd_le_etd_plus_1", *r.setd, *r.etd + 1);
  } else {
    flags.skip("etd_le_setd");
    flags.skip("setd_le_etd_plus_1");
  }
  flags.eq("hs_eq_setd_z", r.hs, r.setd_z);
  if (r.max > 0) {
    flags.add("hs_ge_hit_bound", std::to_string(r.hs), fraction_text(Fraction(r.n - 1, r.max)),
              r.hs * r.max >= r.n - 1);
  } else {
    flags.skip("hs_ge_hit_bound");
  }
  flags.eq("mami_eq_max_shift_maj", r.mami, mami_via_majority(a));
  flags.le("hs_greedy_ge_hs", r.hs, r.hs_greedy);

  // A lower-bound DEN still belongs on the small side of these two.
  if (r.opt) {
    flags.add("den_le_opt", fraction_text(r.den), std::to_string(*r.opt), r.den <= Fraction(*r.opt));
  } else {
    flags.skip("den_le_opt");
  }
  if (etd_exact) {
    flags.add("den_minus_1_le_etd", fraction_text(Fraction(r.den.num() - r.den.den(), r.den.den())),
              std::to_string(*r.etd), r.den <= Fraction(*r.etd + 1));
  } else {
    flags.skip("den_minus_1_le_etd");
  }
  if (r.den_exact && r.etd) {
    const double rhs = ln_n * r.den.to_double() + 1;
    flags.add("etd_le_ln_n_den_plus_1", std::to_string(*r.etd), real(rhs),
              static_cast<double>(*r.etd) <= rhs + kFloatSlack);
  } else {
    flags.skip("etd_le_ln_n_den_plus_1");
  }
  if (r.den_exact && r.n >= 2) {
    const auto rhs = static_cast<std::size_t>(std::ceil(r.den.to_double() * ln_n - kFloatSlack));
    flags.le("greedy_depth_le_ceil_den_ln_n", r.greedy_depth, rhs);
  } else {
    flags.skip("greedy_depth_le_ceil_den_ln_n");
  }
  return r;
}

nlohmann::ordered_json report_to_json(const MeasuresReport& r) {
  using Json = nlohmann::ordered_json;
  const auto optional_int = [](const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); };
  Json witness = Json::array();
  for (std::size_t i : r.den_witness) witness.push_back(i + 1);
  Json flags = Json::array();
  for (const BoundFlag& f : r.flags) {
    flags.push_back({{"name", f.name}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"pass", f.pass}});
  }
  Json out;
  out["n"] = r.n;
  out["m"] = r.m;
  out["maj"] = r.maj;
  out["max"] = r.max;
  out["mami"] = r.mami;
  out["etd"] = optional_int(r.etd);
  out["etd_sampled"] = r.etd_sampled;
  out["setd"] = optional_int(r.setd);
  out["setd_sampled"] = r.setd_sampled;
  out["etd_z"] = r.etd_z;
  out["setd_z"] = r.setd_z;
  out["hs_of_A"] = r.hs;
  out["hs_greedy"] = r.hs_greedy;
  out["den"] = fraction_text(r.den);
  out["den_exact"] = r.den_exact;
  out["den_witness"] = std::move(witness);
  out["log2n"] = r.log2n;
  out["ceil_log2n"] = r.ceil_log2n;
  out["opt"] = optional_int(r.opt);
  out["greedy_depth"] = r.greedy_depth;
  out["lbo2_bound"] = r.lbo2_bound ? Json(*r.lbo2_bound) : Json(nullptr);
  out["all_pass"] = r.all_pass();
  out["flags"] = std::move(flags);
  out["skipped_flags"] = r.skipped_flags;
  out["notes"] = r.notes;
  return out;
}

std::string report_to_text(const MeasuresReport& r) {
  const auto opt_text = [](const std::optional<std::size_t>& v, bool sampled) {
    if (!v) return std::string("n/a");
    return std::to_string(*v) + (sampled ? " (sampled lower bound)" : "");
  };
  std::ostringstream out;
  out << "instance      n=" << r.n << " m=" << r.m << "\n"
      << "MAJ           " << r.maj << "\n"
      << "MAX / MAMI    " << r.max << " / " << r.mami << "\n"
      << "ETD / SETD    " << opt_text(r.etd, r.etd_sampled) << " / " << opt_text(r.setd, r.setd_sampled) << "\n"
      << "ETDz / SETDz  " << r.etd_z << " / " << r.setd_z << "\n"
      << "HS (greedy)   " << r.hs << " (" << r.hs_greedy << ")\n"
      << "DEN           " << r.den.to_string() << (r.den_exact ? "" : " (lower bound)") << "\n"
      << "log2 n        " << real(r.log2n) << "\n"
      << "OPT           " << opt_text(r.opt, false) << "\n"
      << "greedy depth  " << r.greedy_depth << "\n";
  out << "flags:\n";
  for (const BoundFlag& f : r.flags) {
    out << "  " << (f.pass ? "ok   " : "FAIL ") << f.name << ": " << f.lhs << " vs " << f.rhs << "\n";
  }
  for (const std::string& s : r.skipped_flags) out << "  skip " << s << "\n";
  for (const std::string& note : r.notes) out << "note: " << note << "\n";
  return out.str();
}

}  // namespace mhdt
