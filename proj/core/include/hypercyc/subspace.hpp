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

// Finite sections of the basis functions
//
//   f_d = z^{beta(m_d)} + sum_{k in B_d, k != m_d} V^{beta(k)} p_k
//
// whose closed span consists of hypercyclic vectors for D, together with the
// exact orbit decomposition D^{beta(k)} f = c_b p_k + q + h and certified
// majorants for the parts a finite section cannot see.

#ifndef HYPERCYC_SUBSPACE_HPP
#define HYPERCYC_SUBSPACE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "hypercyc/enumeration.hpp"
#include "hypercyc/limits.hpp"
#include "hypercyc/series.hpp"

namespace hypercyc {

using CoeffMap = std::map<std::uint64_t, GaussianRational>;  // d -> c_d

// One constituent of a truncation: c_d z^{beta(m_d)} (index == m_d) or
// c_d V^{beta(k)} p_k (index == k, k in B_d, k != m_d).
struct SubspacePiece {
  enum class Kind { kBasisMonomial, kVolterra };
  Kind kind = Kind::kBasisMonomial;
  std::uint64_t d = 0;
  std::uint64_t index = 0;
  SparseSeries series;  // already multiplied by c_d
};

struct SubspaceTruncation {
  CoeffMap coeffs;  // only nonzero entries are kept
  std::uint64_t cutoff = 0;
  SparseSeries series;
  BetaTable beta;  // covers beta(1..cutoff+1) and every needed beta(m_d)
  std::vector<SubspacePiece> pieces;
};

SubspaceTruncation basis_truncation(std::uint64_t d, std::uint64_t cutoff,
                                    const ResourceLimits& limits = {});

// Exact sum_d c_d f_d restricted to Volterra terms with index <= cutoff.
// Verifies that the supports of all pieces are pairwise disjoint.
SubspaceTruncation combination(const CoeffMap& coeffs, std::uint64_t cutoff,
                               const ResourceLimits& limits = {});

// Returns true when the pieces' supports are pairwise disjoint.
bool pieces_disjoint(const SubspaceTruncation& t);

struct OrbitDecomposition {
  std::uint64_t k = 0;
  std::uint64_t d = 0;        // d_k, the class containing k
  GaussianRational scale;     // c_{d_k}
  SparseSeries target;        // c_{d_k} p_k
  SparseSeries q_part;        // surviving images of the basis monomials
  SparseSeries h_part;        // surviving Volterra terms with index > k
};

// D^{beta(k)} t.series = target + q_part + h_part, exactly. Requires k to be
// a non-minimal member of its class and k <= t.cutoff (IndexNotCovered
// otherwise).
OrbitDecomposition decompose_orbit(const SubspaceTruncation& t, std::uint64_t k);

// Certified upper bound for sum_{m>k} c m^2 a^{2m} / m!: exact partial sum up
// to the first index M* > k whose successor ratio (m+1)a^2/m^2 is <= 1/2,
// plus t_{M*} for the geometric remainder. Non-increasing in k.
Rational tail_majorant_h(std::uint64_t k, std::uint64_t a, const Rational& c,
                         const ResourceLimits& limits = {});

// Decay constant max |c_d|_box (4a)^{beta(m_d)} over the nonzero coefficients.
Rational decay_constant(const CoeffMap& coeffs, std::uint64_t a, const ResourceLimits& limits = {});

// c * sum_{m_d > k, c_d != 0} 2^{-beta(m_d)} with c = decay_constant.
Rational tail_majorant_q(std::uint64_t k, std::uint64_t a, const CoeffMap& coeffs,
                         const ResourceLimits& limits = {});

// Bound on the whole h-part of D^{beta(k)} f for the untruncated combination:
//   sum_{k<n<=N} c n^2 a^{beta(n)-beta(k)+n} / (beta(n)-beta(k))!
//     + tail_majorant_h(beta(N+1) - beta(k) - 1, a, c)
// with c = max |c_d|_box and N = table.size() - 1.
Rational h_chain_majorant(std::uint64_t k, std::uint64_t a, const Rational& c,
                          const BetaTable& table, const ResourceLimits& limits = {});

// Single chain term c n^2 a^{beta(n)-beta(k)+n} / (beta(n)-beta(k))!.
Rational h_chain_term(std::uint64_t k, std::uint64_t n, std::uint64_t a, const Rational& c,
                      const BetaTable& table);

struct DefectReport {
  std::uint64_t k = 0;
  std::uint64_t a = 0;
  NormBounds truncated_value;  // of q_part + h_part
  Rational tail_upper;
  Rational total_upper;
};

DefectReport orbit_defect(const SubspaceTruncation& t, std::uint64_t k, std::uint64_t a,
                          const ResourceLimits& limits = {});

}  // namespace hypercyc

#endif  // HYPERCYC_SUBSPACE_HPP
