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

// Inductive construction of a single entire function f = sum_k r_k whose
// every non-constant polynomial image p o f is hypercyclic for D.
//
// Step k plants the block
//
//   r_k(z) = z^n/n^n + (n^{(d-1)n}/d) V^{n^2+(d-1)n} p(z) / z^{(d-1)n}
//
// with (d, p) = (d_k, p_k) and n = n_k the least admissible value. A value n
// is admissible when, with f_k = f_{k-1} + r_k and nu_k = n^2 + (d-1)n,
//
//   (a1) n > n_{k-1}
//   (a2) |r_k|_k <= 2^-k
//   (a3) |D^nu (f_k^j - f_{k-1}^j)|_k <= 2^-k, 1 <= j <= k,
//        1 <= nu <= n_{k-1}^2 + k n_{k-1}           (k >= 2)
//   (a4) |D^{nu_k} f_k^j|_k <= 2^-k, 1 <= j < d, and
//        |p - D^{nu_k} f_k^d|_k <= 2^-k
//
// where |.|_k is the certified upper (box) bound of the weighted norm.

#ifndef HYPERCYC_ALGEBRA_HPP
#define HYPERCYC_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercyc/errors.hpp"
#include "hypercyc/limits.hpp"
#include "hypercyc/series.hpp"

namespace hypercyc {

struct AlphaPair {
  std::uint64_t d = 1;
  SparseSeries p;
};

// Closed form: (n^{(d-1)n}/d) sum_j j! c_j z^{j+n^2} / (j+(d-1)n+n^2)!.
SparseSeries q_block(const AlphaPair& alpha, std::uint64_t n);
// Same polynomial computed as shift_down(V^{n^2+(d-1)n} p * n^{(d-1)n}/d, (d-1)n).
SparseSeries q_block_via_volterra(const AlphaPair& alpha, std::uint64_t n);
SparseSeries r_block(const AlphaPair& alpha, std::uint64_t n);

// 2 k! n^{(d-1)n} a^{k+n^2} / (n^2)!, the explicit bound on |q_block|_a for
// p in P_{k,k}.
Rational q_block_bound(std::uint64_t k, std::uint64_t d, std::uint64_t n, std::uint64_t a);

// Smallest k with p in P_{k,k} under the box gate.
std::uint64_t poly_class_index(const SparseSeries& p);

struct LemmaQuantities {
  NormBounds block_norm;                        // |r|_a
  NormBounds product_derivative;                // |D^nu (h r^b)|_a
  std::optional<NormBounds> high_derivative;    // |D^{n^2+(d-1)n}(h r^b)|_a, only for b < d
  NormBounds target_defect;                     // |p - D^{n^2+(d-1)n}(r^d)|_a
};

LemmaQuantities lemma_quantities(const AlphaPair& alpha, std::uint64_t n, std::uint64_t a,
                                 const SparseSeries& h, std::uint64_t b, std::uint64_t nu);
// Throws BadArgument unless 1 <= b < d.
NormBounds high_derivative_quantity(const AlphaPair& alpha, std::uint64_t n, std::uint64_t a,
                                    const SparseSeries& h, std::uint64_t b);

// Every inequality is stored as lhs <= rhs.
struct Comparison {
  enum class Condition { kA1, kA2, kA3, kA4, kA4Target };
  Condition condition = Condition::kA1;
  std::uint64_t j = 0;
  std::uint64_t nu = 0;
  Rational lhs;
  Rational rhs;

  bool holds() const { return lhs <= rhs; }
  friend bool operator==(const Comparison&, const Comparison&) = default;
};

std::string condition_name(Comparison::Condition c);
Comparison::Condition parse_condition_name(const std::string& name);

struct ConditionReport {
  std::uint64_t step = 0;
  std::uint64_t candidate = 0;
  bool passed = false;
  std::optional<Comparison> first_failure;
  std::vector<Comparison> comparisons;  // everything evaluated, in order
};

struct StepRecord {
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::uint64_t nu = 0;  // n^2 + (d-1)n
  SparseSeries p;
  SparseSeries block;
  std::vector<Comparison> certificates;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct AlgebraState {
  std::vector<StepRecord> steps;
  SparseSeries partial;  // f_K

  std::uint64_t size() const { return steps.size(); }
  friend bool operator==(const AlgebraState&, const AlgebraState&) = default;
};

class SearchCapExceeded : public Error {
 public:
  SearchCapExceeded(const std::string& what, ConditionReport last)
      : Error(what), last_(std::move(last)) {}
  const ConditionReport& last_report() const { return last_; }

 private:
  ConditionReport last_;
};

// Evaluates (a1)-(a4) for n_m = candidate on top of a state with m-1 steps.
// Comparisons stop at the first failure.
ConditionReport check_step_conditions(const AlgebraState& state, std::uint64_t m, std::uint64_t candidate,
                                      const ResourceLimits& limits = {});

// Appends the least passing candidate in (n_{m-1}, n_{m-1} + search_cap]
// (n_0 = 2, so the first step starts at 3).
AlgebraState extend(const AlgebraState& state, std::uint64_t search_cap, const ResourceLimits& limits = {});

AlgebraState construct(std::uint64_t K, std::uint64_t search_cap, const ResourceLimits& limits = {});

struct VerificationResult {
  bool ok = true;
  std::string detail;
};

// Recomputes every block, partial sum and stored comparison from scratch
// (direct D^nu, plain powers) and checks the full set of required
// comparisons is present and holds.
VerificationResult verify_state(const AlgebraState& state);

// |p_k - D^{nu_k}(p o f_K)|_m for a monic p of degree d_k, k <= K, m <= k.
NormBounds algebra_defect(const AlgebraState& state, const SparseSeries& p, std::uint64_t k, std::uint64_t m);

// 2^{1-k} (1 + sum_{1<=j<d} |c_j|_box)
Rational algebra_defect_bound(const SparseSeries& p, std::uint64_t k);

}  // namespace hypercyc

#endif  // HYPERCYC_ALGEBRA_HPP
