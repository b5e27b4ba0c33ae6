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


#ifndef HYPERCYC_EXPERIMENTS_HPP
#define HYPERCYC_EXPERIMENTS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hypercyc/algebra.hpp"
#include "hypercyc/limits.hpp"
#include "hypercyc/report.hpp"
#include "hypercyc/subspace.hpp"

namespace hypercyc {

struct DefectQuery {
  SparseSeries p;  // monic, degree d_k
  std::uint64_t k = 0;
  std::uint64_t m = 0;
};

// Parameters shared by all commands; each command reads what it needs.
struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::uint64_t cases = 100;
  bool inject_fault = false;

  CoeffMap coeffs{{1, GaussianRational(1)}};
  std::uint64_t cutoff = 0;  // 0: largest entry of k_list
  std::vector<std::uint64_t> k_list{3, 6};
  std::vector<std::uint64_t> norm_bases{1};

  std::uint64_t K = 3;
  std::uint64_t search_cap = 200;
  std::vector<DefectQuery> defects;  // empty: p = z^{d_k}, every k <= K, m <= k

  ResourceLimits limits;
  std::string out;
  std::string state;
  std::string in;
};

// Keys: seed, cases, inject_fault, coeffs ({"d": "re" or "re im"}), cutoff,
// k_list, norm_bases, K, search_cap, defects ([{"poly", "k", "m"}] with poly
// in the series text format, ';' allowed as line separator),
// resource_cap_bits, max_exponent, out, state, in. Unknown keys are
// rejected. Throws ParseError.
ExperimentConfig parse_experiment_config(std::string_view json);

// Throws BadArgument when a cap or list is empty or non-positive.
void validate_config(const ExperimentConfig& config);

GaussianRational parse_gaussian(std::string_view text);

struct SubspaceResult {
  std::vector<DefectReport> reports;
  // params k, a; values lower, upper, tail_upper, total_upper,
  // total_upper_approx (advisory)
  std::vector<ReportRow> rows;
};

// Throws ResourceCap naming the offending beta(k) when k lies beyond the
// desk policy (beta(k) within cap_bits and max_exponent).
SubspaceResult run_subspace_experiment(const ExperimentConfig& config);

struct AlgebraResult {
  AlgebraState state;
  // params k, m, poly; values upper, bound, upper_approx; pass
  std::vector<ReportRow> rows;
  bool all_pass = true;
};

using StepCallback = std::function<void(const AlgebraState&)>;

// Extends `resume` (a verified prefix, possibly empty) to K steps, calling
// on_step after each new step, then evaluates the configured defects.
AlgebraResult run_algebra_experiment(const ExperimentConfig& config, const AlgebraState& resume = {},
                                     const StepCallback& on_step = {});

}  // namespace hypercyc

#endif  // HYPERCYC_EXPERIMENTS_HPP
