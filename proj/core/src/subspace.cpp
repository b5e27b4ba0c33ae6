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

#include "hypercyc/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hypercyc/errors.hpp"

namespace hypercyc {

namespace {

void require_bits(double bits, const ResourceLimits& limits, const std::string& what) {
  if (bits > static_cast<double>(limits.cap_bits)) {
    throw ResourceCap(what + " needs about " + std::to_string(static_cast<std::uint64_t>(bits)) +
                      " bits (cap " + std::to_string(limits.cap_bits) + ")");
  }
}

double factorial_bits(std::uint64_t m) {
  if (m < 2) return 1.0;
  return std::lgamma(static_cast<double>(m) + 1.0) / std::log(2.0);
}

Integer int_pow(std::uint64_t base, std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

void require_exponent(std::uint64_t e, const ResourceLimits& limits, const std::string& what) {
  if (e > limits.max_exponent) {
    throw ResourceCap(what + " would materialise exponent " + std::to_string(e) +
                      " (max_exponent " + std::to_string(limits.max_exponent) + ")");
  }
}

Rational max_box(const CoeffMap& coeffs) {
  Rational c = 0;
  for (const auto& [d, cd] : coeffs) c = std::max(c, cd.box_modulus());
  return c;
}

}  // namespace

SubspaceTruncation combination(const CoeffMap& coeffs, std::uint64_t cutoff,
                               const ResourceLimits& limits) {
  if (cutoff == 0) throw BadArgument("combination: cutoff must be positive");
  SubspaceTruncation t;
  t.cutoff = cutoff;
  std::uint64_t table_size = cutoff + 1;
  for (const auto& [d, cd] : coeffs) {
    if (d == 0) throw BadArgument("combination: class index d is one-based");
    if (cd.is_zero()) continue;
    t.coeffs.emplace(d, cd);
    table_size = std::max(table_size, pair(d, 1));
  }
  t.beta = beta(table_size, limits);

  std::vector<std::pair<GaussianRational, SparseSeries>> parts;
  for (const auto& [d, cd] : t.coeffs) {
    const std::uint64_t m_d = pair(d, 1);
    const std::uint64_t g_exp = t.beta.at(m_d);
    require_exponent(g_exp, limits, "g_" + std::to_string(d));
    t.pieces.push_back({SubspacePiece::Kind::kBasisMonomial, d, m_d, SparseSeries::monomial(g_exp, cd)});
    for (std::uint64_t j = 2;; ++j) {
      const std::uint64_t k = pair(d, j);
      if (k > cutoff) break;
      const SparseSeries& p = entry(k).p;
      if (p.is_zero()) continue;
      require_exponent(t.beta.at(k) + *p.degree(), limits, "V^beta(" + std::to_string(k) + ") p_" + std::to_string(k));
      t.pieces.push_back({SubspacePiece::Kind::kVolterra, d, k, volterra_n(p, t.beta.at(k)).scaled(cd)});
    }
  }
  for (const auto& piece : t.pieces) parts.emplace_back(GaussianRational(1), piece.series);
  t.series = linear_combine(parts);
  if (!pieces_disjoint(t)) throw Error("combination: constituent supports overlap");
  return t;
}

SubspaceTruncation basis_truncation(std::uint64_t d, std::uint64_t cutoff, const ResourceLimits& limits) {
  return combination(CoeffMap{{d, GaussianRational(1)}}, cutoff, limits);
}

bool pieces_disjoint(const SubspaceTruncation& t) {
  std::set<Exponent> seen;
  for (const auto& piece : t.pieces) {
    for (const auto& term : piece.series.terms()) {
      if (!seen.insert(term.exponent).second) return false;
    }
  }
  return true;
}

OrbitDecomposition decompose_orbit(const SubspaceTruncation& t, std::uint64_t k) {
  if (k > t.cutoff) {
    throw IndexNotCovered("decompose_orbit: k=" + std::to_string(k) + " exceeds cutoff " +
                          std::to_string(t.cutoff));
  }
  if (is_class_minimum(k)) {
    throw BadArgument("decompose_orbit: k=" + std::to_string(k) + " is the first index of its class");
  }
  OrbitDecomposition out;
  out.k = k;
  out.d = unpair(k).first;
  if (auto it = t.coeffs.find(out.d); it != t.coeffs.end()) out.scale = it->second;
  out.target = entry(k).p.scaled(out.scale);

  const std::uint64_t order = t.beta.at(k);
  std::vector<std::pair<GaussianRational, SparseSeries>> q_parts, h_parts;
  for (const auto& piece : t.pieces) {
    if (piece.kind == SubspacePiece::Kind::kBasisMonomial) {
      q_parts.emplace_back(GaussianRational(1), derivative_n(piece.series, order));
    } else if (piece.index > k) {
      h_parts.emplace_back(GaussianRational(1), derivative_n(piece.series, order));
    }
    // Volterra pieces with index < k are annihilated; index == k is the target.
  }
  out.q_part = linear_combine(q_parts);
  out.h_part = linear_combine(h_parts);
  return out;
}

Rational tail_majorant_h(std::uint64_t k, std::uint64_t a, const Rational& c, const ResourceLimits& limits) {
  if (a == 0) throw BadArgument("tail_majorant_h: norm base must be positive");
  if (sgn(c) == 0) return 0;
  if (sgn(c) < 0) throw BadArgument("tail_majorant_h: c must be non-negative");
  const std::uint64_t first = k + 1;
  require_bits(factorial_bits(first) + 2.0 * static_cast<double>(first) * std::log2(static_cast<double>(a)),
               limits, "tail_majorant_h(k=" + std::to_string(k) + ")");
  const Integer a2 = Integer(a) * a;

  // t_{m+1} = t_m (m+1) a^2 / m^2
  Rational term = c * ratio(Integer(first) * first * int_pow(a, 2 * first), factorial(first));
  Rational sum = 0;
  for (std::uint64_t m = first;; ++m) {
    sum += term;
    const Integer mm = Integer(m) * m;
    if (2 * (m + 1) * a2 <= mm) break;  // ratio to the next term <= 1/2
    term *= ratio(Integer(m + 1) * a2, mm);
  }
  return sum + term;
}

Rational decay_constant(const CoeffMap& coeffs, std::uint64_t a, const ResourceLimits& limits) {
  Rational c = 0;
  std::uint64_t need = 1;
  for (const auto& [d, cd] : coeffs) {
    if (!cd.is_zero()) need = std::max(need, pair(d, 1));
  }
  const BetaTable table = beta(need, limits);
  for (const auto& [d, cd] : coeffs) {
    if (cd.is_zero()) continue;
    const std::uint64_t b = table.at(pair(d, 1));
    require_bits(static_cast<double>(b) * std::log2(4.0 * static_cast<double>(a)), limits,
                 "decay constant for d=" + std::to_string(d));
    c = std::max(c, Rational(cd.box_modulus() * Rational(int_pow(4 * a, b))));
  }
  return c;
}

Rational tail_majorant_q(std::uint64_t k, std::uint64_t a, const CoeffMap& coeffs, const ResourceLimits& limits) {
  CoeffMap later;
  for (const auto& [d, cd] : coeffs) {
    if (!cd.is_zero() && pair(d, 1) > k) later.emplace(d, cd);
  }
  if (later.empty()) return 0;
  const Rational c = decay_constant(coeffs, a, limits);
  std::uint64_t need = 1;
  for (const auto& [d, cd] : later) need = std::max(need, pair(d, 1));
  const BetaTable table = beta(need, limits);
  Rational sum = 0;
  for (const auto& [d, cd] : later) sum += pow2(-static_cast<long>(table.at(pair(d, 1))));
  return c * sum;
}

Rational h_chain_term(std::uint64_t k, std::uint64_t n, std::uint64_t a, const Rational& c,
                      const BetaTable& table) {
  if (n <= k) throw BadArgument("h_chain_term: n must exceed k");
  const std::uint64_t gap = table.at(n) - table.at(k);
  return c * ratio(Integer(n) * n * int_pow(a, gap + n), factorial(gap));
}

Rational h_chain_majorant(std::uint64_t k, std::uint64_t a, const Rational& c, const BetaTable& table,
                          const ResourceLimits& limits) {
  if (table.size() < k + 1) {
    throw IndexNotCovered("h_chain_majorant: table must contain beta(k+1)");
  }
  if (sgn(c) == 0) return 0;
  const std::uint64_t last = table.size() - 1;
  Rational sum = 0;
  for (std::uint64_t n = k + 1; n <= last; ++n) {
    const std::uint64_t gap = table.at(n) - table.at(k);
    require_bits(factorial_bits(gap), limits, "h-chain term n=" + std::to_string(n));
    sum += h_chain_term(k, n, a, c, table);
  }
  // Indices beyond the table: distinct gaps beta(n)-beta(k) >= beta(last+1)-beta(k) >= n.
  sum += tail_majorant_h(table.at(last + 1) - table.at(k) - 1, a, c, limits);
  return sum;
}

DefectReport orbit_defect(const SubspaceTruncation& t, std::uint64_t k, std::uint64_t a,
                          const ResourceLimits& limits) {
  const OrbitDecomposition dec = decompose_orbit(t, k);
  DefectReport r;
  r.k = k;
  r.a = a;
  r.truncated_value = graded_norm_bounds(dec.q_part + dec.h_part, a);
  r.tail_upper = h_chain_majorant(k, a, max_box(t.coeffs), t.beta, limits) +
                 tail_majorant_q(k, a, t.coeffs, limits);
  r.total_upper = r.truncated_value.upper + r.tail_upper;
  return r;
}

}  // namespace hypercyc
