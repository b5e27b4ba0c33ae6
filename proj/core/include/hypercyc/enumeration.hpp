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

#ifndef HYPERCYC_ENUMERATION_HPP
#define HYPERCYC_ENUMERATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypercyc/limits.hpp"
#include "hypercyc/series.hpp"

namespace hypercyc {

// Cantor-diagonal bijection N x N -> N (all one-based):
//   pair(m, j) = (m+j-2)(m+j-1)/2 + j,   max(m, j) <= pair(m, j).
// Throws BadArgument on a zero argument or on overflow.
std::uint64_t pair(std::uint64_t m, std::uint64_t j);
std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t k);

// Arbitrary-precision variants used by the raw polynomial enumeration.
Integer pair(const Integer& m, const Integer& j);
std::pair<Integer, Integer> unpair(const Integer& k);

// Bijection between the positive integers and Q: 0 <-> 0, 2t-1 <-> +q_t,
// 2t <-> -q_t where q_t is the rational at node t of the Stern-Brocot tree
// (the binary digits of t after the leading one spell the path from 1/1,
// 0 = left, 1 = right). Index here is zero-based.
Rational rational_from_index(const Integer& x);
Integer index_of_rational(const Rational& q);

// Bijection between the non-negative integers and Q(i): x is unpaired
// (zero-based) into (u, v) and mapped to rational(u) + i*rational(v).
GaussianRational gaussian_from_index(const Integer& x);
Integer index_of_gaussian(const GaussianRational& g);

// Enumeration t_1, t_2, ... of every Gaussian-rational polynomial.
//
// t_1 = 0. For i >= 2, x = i - 1 is decoded into a finite list of
// non-negative integers [a_0, ..., a_D] by the standard list bijection
//   list(0) = [],  list(x) = [u] ++ list(v) where (u, v) = unpair0(x - 1),
// and the polynomial is sum_{j<D} g(a_j) z^j + g(a_D + 1) z^D, g being the
// Gaussian index bijection above (the +1 keeps the leading coefficient
// nonzero). index_of_poly inverts the map exactly.
SparseSeries raw_poly(const Integer& i);
SparseSeries raw_poly(std::uint64_t i);
Integer index_of_poly(const SparseSeries& p);

// s_j: with (i, l) = unpair(j), t_i if t_i lies in P_{j,j} (box gate), else 0.
SparseSeries dense_poly(std::uint64_t j);

struct EnumerationEntry {
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  SparseSeries p;

  friend bool operator==(const EnumerationEntry&, const EnumerationEntry&) = default;
};

// (d_k, p_k) = (m, s_j) where (m, j) = unpair(k).
EnumerationEntry entry(std::uint64_t k);

// m_d = min B_d together with the first `count` members of
// B_d = {k : d_k = d} = {pair(d, j) : j >= 1}.
struct ClassIndices {
  std::uint64_t first = 0;
  std::vector<std::uint64_t> members;
};
ClassIndices class_indices(std::uint64_t d, std::size_t count);

// True when k is the smallest index of its class, i.e. k = m_{d_k}.
bool is_class_minimum(std::uint64_t k);

// The fast-growth sequence: beta(1) = 1 and beta(k+1) is the least n with
// n > beta(k) + k and n^beta(k) <= 2^n.
class BetaTable {
 public:
  BetaTable() = default;
  explicit BetaTable(std::vector<std::uint64_t> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  // One-based.
  std::uint64_t at(std::size_t k) const;
  const std::vector<std::uint64_t>& values() const { return values_; }

  friend bool operator==(const BetaTable&, const BetaTable&) = default;

 private:
  std::vector<std::uint64_t> values_;
};

// beta(1..K). Results are memoised process-wide (mutex protected). Throws
// ResourceCap when a search would handle integers above limits.cap_bits; the
// message names the beta index that could not be produced.
BetaTable beta(std::size_t K, const ResourceLimits& limits = {});

// Exact test of n^b <= 2^n.
bool power_fits_in_pow2(std::uint64_t n, std::uint64_t b);

struct BetaViolation {
  std::size_t k = 0;  // the offending step produces beta(k+1)
  std::string what;
};

// Re-checks both growth constraints and greedy minimality step by step.
std::optional<BetaViolation> check_beta_table(const BetaTable& table);

}  // namespace hypercyc

#endif  // HYPERCYC_ENUMERATION_HPP
