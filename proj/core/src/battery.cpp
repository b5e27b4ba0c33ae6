// Copyright 2026 The hypercyc Authors.
//
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


#include "hypercyc/battery.hpp"

#include <algorithm>
#include <functional>

#include "hypercyc/algebra.hpp"
#include "hypercyc/enumeration.hpp"
#include "hypercyc/random.hpp"
#include "hypercyc/subspace.hpp"

namespace hypercyc {

namespace {

std::string inline_text(const SparseSeries& f) {
  std::string s = to_text(f);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  std::replace(s.begin(), s.end(), '\n', ';');
  return s.empty() ? "0" : s;
}

Integer ipow(std::uint64_t base, std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// A case returns an empty string when the property holds and a replayable
// description of its inputs otherwise.
using Case = std::function<std::string(SeriesGenerator&, bool flip)>;

struct Check {
  const char* suite;
  const char* name;
  Case run;
};

std::string verdict(bool ok, bool flip, const std::string& input) { return (ok != flip) ? std::string() : input; }

std::vector<Check> all_checks(const ResourceLimits& limits) {
  std::vector<Check> checks;
  checks.push_back({"series-core", "right-inverse", [](SeriesGenerator& g, bool flip) {
                      const SparseSeries f = g.series();
                      for (std::uint64_t n : {1, 3, 10}) {
                        if (derivative_n(volterra_n(f, n), n) != f || flip) {
                          return "n=" + std::to_string(n) + " f=" + inline_text(f);
                        }
                      }
                      return std::string();
                    }});
  checks.push_back({"series-core", "monotone", [](SeriesGenerator& g, bool flip) {
                      const SparseSeries f = g.series();
                      const std::uint64_t a = g.uniform(1, 4), b = g.uniform(a, 5);
                      const NormBounds x = graded_norm_bounds(f, a), y = graded_norm_bounds(f, b);
                      return verdict(x.upper <= y.upper && x.lower <= y.lower, flip,
                                     "a=" + std::to_string(a) + " b=" + std::to_string(b) + " f=" + inline_text(f));
                    }});
  checks.push_back({"series-core", "submultiplicative", [](SeriesGenerator& g, bool flip) {
                      const RandomSeriesSpec spec{30, 8, 50, 20};
                      const SparseSeries f = g.series(spec), h = g.series(spec);
                      const std::uint64_t a = g.uniform(1, 4);
                      return verdict(upper_norm(multiply(f, h), a) <= upper_norm(f, a) * upper_norm(h, a), flip,
                                     "a=" + std::to_string(a) + " f=" + inline_text(f) + " g=" + inline_text(h));
                    }});
  checks.push_back({"series-core", "derivative-bound", [](SeriesGenerator& g, bool flip) {
                      const SparseSeries f = g.series();
                      const std::uint64_t a = g.uniform(1, 4), n = g.uniform(0, 12);
                      const std::uint64_t k = *f.degree() + 1;
                      const Rational factor = ratio(ipow(k, n), ipow(a, n));
                      return verdict(upper_norm(derivative_n(f, n), a) <= factor * upper_norm(f, a), flip,
                                     "a=" + std::to_string(a) + " n=" + std::to_string(n) + " f=" + inline_text(f));
                    }});
  checks.push_back({"series-core", "volterra-bound", [](SeriesGenerator& g, bool flip) {
                      const SparseSeries f = g.series();
                      const std::uint64_t a = g.uniform(1, 4), n = g.uniform(0, 12);
                      const Rational factor = ratio(ipow(a, n), factorial(n));
                      return verdict(upper_norm(volterra_n(f, n), a) <= factor * upper_norm(f, a), flip,
                                     "a=" + std::to_string(a) + " n=" + std::to_string(n) + " f=" + inline_text(f));
                    }});
  checks.push_back({"series-core", "sandwich", [](SeriesGenerator& g, bool flip) {
                      const SparseSeries f = g.series();
                      const std::uint64_t a = g.uniform(1, 5);
                      const NormBounds nb = graded_norm_bounds(f, a);
                      return verdict(nb.lower <= nb.upper && nb.upper <= 2 * nb.lower, flip,
                                     "a=" + std::to_string(a) + " f=" + inline_text(f));
                    }});
  checks.push_back({"enumeration", "class-bound", [](SeriesGenerator& g, bool flip) {
                      const std::uint64_t k = g.uniform(1, 5000);
                      const EnumerationEntry e = entry(k);
                      return verdict(e.d <= k && PolyClassSpec{k, Rational(k)}.contains(e.p), flip,
                                     "k=" + std::to_string(k));
                    }});
  checks.push_back({"enumeration", "pairing", [](SeriesGenerator& g, bool flip) {
                      const std::uint64_t k = g.uniform(1, 1000000);
                      const auto [m, j] = unpair(k);
                      return verdict(pair(m, j) == k, flip, "k=" + std::to_string(k));
                    }});
  checks.push_back({"enumeration", "poly-index", [](SeriesGenerator& g, bool flip) {
                      const std::uint64_t i = g.uniform(1, 1000000);
                      return verdict(index_of_poly(raw_poly(i)) == i, flip, "i=" + std::to_string(i));
                    }});
  checks.push_back({"subspace", "decomposition", [limits](SeriesGenerator& g, bool flip) {
                      CoeffMap coeffs;
                      for (std::uint64_t d = 1; d <= 3; ++d) {
                        if (g.coin()) coeffs.emplace(d, g.nonzero_gaussian(9, 9));
                      }
                      static constexpr std::uint64_t kAdmissible[] = {3, 5, 6};
                      const std::uint64_t k = kAdmissible[g.uniform(0, 2)];
                      const std::uint64_t cutoff = g.uniform(k, 6);
                      std::string input = "cutoff=" + std::to_string(cutoff) + " k=" + std::to_string(k) + " coeffs=";
                      for (const auto& [d, c] : coeffs) input += std::to_string(d) + ":" + c.to_text() + ";";
                      const SubspaceTruncation t = combination(coeffs, cutoff, limits);
                      const OrbitDecomposition dec = decompose_orbit(t, k);
                      const SparseSeries rest =
                          derivative_n(t.series, t.beta.at(k)) - dec.target - dec.q_part - dec.h_part;
                      return verdict(rest.is_zero() && pieces_disjoint(t), flip, input);
                    }});
  checks.push_back({"subspace", "h-majorant", [limits](SeriesGenerator& g, bool flip) {
                      const GaussianRational c = g.nonzero_gaussian(9, 9);
                      const std::uint64_t a = g.uniform(1, 3);
                      const std::uint64_t k = 3;
                      const SubspaceTruncation t = combination(CoeffMap{{1, c}}, 6, limits);
                      const OrbitDecomposition dec = decompose_orbit(t, k);
                      Rational chain = 0;
                      for (std::uint64_t n = k + 1; n <= t.cutoff; ++n) {
                        if (unpair(n).first == 1) chain += h_chain_term(k, n, a, c.box_modulus(), t.beta);
                      }
                      return verdict(upper_norm(dec.h_part, a) <= chain, flip,
                                     "a=" + std::to_string(a) + " c=" + c.to_text());
                    }});
  checks.push_back({"algebra", "two-route", [](SeriesGenerator& g, bool flip) {
                      const AlphaPair alpha{g.uniform(1, 4), g.series({5, 6, 20, 10})};
                      const std::uint64_t n = g.uniform(2, 8);
                      return verdict(q_block(alpha, n) == q_block_via_volterra(alpha, n), flip,
                                     "d=" + std::to_string(alpha.d) + " n=" + std::to_string(n) +
                                         " p=" + inline_text(alpha.p));
                    }});
  checks.push_back({"algebra", "q-bound", [](SeriesGenerator& g, bool flip) {
                      const AlphaPair alpha{g.uniform(1, 4), g.series({5, 6, 20, 10})};
                      const std::uint64_t n = g.uniform(2, 8), a = g.uniform(1, 3);
                      const std::uint64_t k = poly_class_index(alpha.p);
                      return verdict(upper_norm(q_block(alpha, n), a) <= q_block_bound(k, alpha.d, n, a), flip,
                                     "d=" + std::to_string(alpha.d) + " n=" + std::to_string(n) + " a=" +
                                         std::to_string(a) + " p=" + inline_text(alpha.p));
                    }});
  return checks;
}

}  // namespace

BatteryResult run_battery(const BatteryConfig& config) {
  BatteryResult result;
  if (config.cases == 0) return result;
  const std::vector<Check> checks = all_checks(config.limits);
  for (std::size_t ci = 0; ci < checks.size(); ++ci) {
    const Check& check = checks[ci];
    // Every check draws from its own stream so adding a check leaves the
    // others' cases unchanged.
    SeriesGenerator gen(config.seed * 0x9E3779B97F4A7C15ULL + ci);
    const bool faulty = config.inject_fault && std::string(check.name) == "sandwich";
    const std::uint64_t fault_case = config.seed % config.cases;
    std::uint64_t violations = 0;
    std::string first_input;
    for (std::uint64_t i = 0; i < config.cases; ++i) {
      std::string bad = check.run(gen, faulty && i == fault_case);
      if (bad.empty()) continue;
      ++violations;
      bad = std::string(check.suite) + "/" + check.name + " case " + std::to_string(i) + ": " + bad;
      if (first_input.empty()) first_input = bad;
      result.violating_inputs.push_back(std::move(bad));
    }
    result.violations += violations;
    result.rows.push_back({"battery",
                           {{"suite", check.suite}, {"check", check.name}},
                           {{"cases", std::to_string(config.cases)},
                            {"violations", std::to_string(violations)},
                            {"first_input", first_input}},
                           violations == 0});
  }
  return result;
}

}  // namespace hypercyc
