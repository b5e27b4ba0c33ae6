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

#ifndef HYPERCYC_SERIES_HPP
#define HYPERCYC_SERIES_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypercyc/gaussian.hpp"

namespace hypercyc {

using Exponent = std::uint64_t;

struct Term {
  Exponent exponent = 0;
  GaussianRational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// A polynomial (a finite section of an entire function) stored as its
// nonzero Taylor coefficients in strictly increasing exponent order. The
// empty term list is the zero series. Values are immutable; every operation
// below returns a fresh series.
class SparseSeries {
 public:
  SparseSeries() = default;

  // Sorts, merges equal exponents and drops zero coefficients.
  static SparseSeries from_terms(std::vector<Term> terms);
  static SparseSeries monomial(Exponent e, GaussianRational c = GaussianRational(1));
  static SparseSeries constant(GaussianRational c) { return monomial(0, std::move(c)); }

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Exponent> degree() const;
  std::optional<Exponent> lowest_exponent() const;
  GaussianRational coefficient(Exponent e) const;

  SparseSeries operator-() const;
  friend SparseSeries operator+(const SparseSeries& a, const SparseSeries& b);
  friend SparseSeries operator-(const SparseSeries& a, const SparseSeries& b);
  friend SparseSeries operator*(const SparseSeries& a, const SparseSeries& b);
  SparseSeries scaled(const GaussianRational& c) const;

  friend bool operator==(const SparseSeries&, const SparseSeries&) = default;

 private:
  // Caller guarantees canonical order and no zeros.
  explicit SparseSeries(std::vector<Term> canonical) : terms_(std::move(canonical)) {}
  friend class SeriesBuilder;

  std::vector<Term> terms_;
};

// Appends terms in strictly increasing exponent order; zero coefficients are
// skipped. Lets hot loops avoid the sort in from_terms.
class SeriesBuilder {
 public:
  void reserve(std::size_t n) { terms_.reserve(n); }
  void push(Exponent e, GaussianRational c);
  SparseSeries build() && { return SparseSeries(std::move(terms_)); }

 private:
  std::vector<Term> terms_;
};

// Certified sandwich for the weighted coefficient norm sum |f_n| a^n:
// lower uses max(|re|,|im|), upper uses |re|+|im|.
struct NormBounds {
  Rational lower;
  Rational upper;
  std::uint64_t base = 1;
};

// P_{k,c}: exponents < k and every coefficient's box modulus <= c.
struct PolyClassSpec {
  std::uint64_t k = 0;
  Rational c;

  bool contains(const SparseSeries& p) const;
};

std::set<Exponent> support(const SparseSeries& f);

// n-th derivative. The coefficient at m is f_{m+n} (m+n)!/m!.
SparseSeries derivative_n(const SparseSeries& f, std::uint64_t n);

// n-fold integration from 0. The coefficient at m+n is f_m m!/(m+n)!.
SparseSeries volterra_n(const SparseSeries& f, std::uint64_t n);

NormBounds graded_norm_bounds(const SparseSeries& f, std::uint64_t a);

// Just the upper half of graded_norm_bounds.
Rational upper_norm(const SparseSeries& f, std::uint64_t a);

SparseSeries multiply(const SparseSeries& f, const SparseSeries& g);
SparseSeries power(const SparseSeries& f, std::uint64_t b);
SparseSeries linear_combine(std::span<const std::pair<GaussianRational, SparseSeries>> pairs);

// p o f for a polynomial p, as sum_j p_j f^j.
SparseSeries compose_poly(const SparseSeries& p, const SparseSeries& f);

// Exact division by z^m. Throws SupportTooLow if an exponent is below m.
SparseSeries shift_down(const SparseSeries& f, Exponent m);

// (m+n)!/m!
Integer falling_factorial(std::uint64_t top, std::uint64_t n);
Integer factorial(std::uint64_t n);

// One term per line, "e re_num/re_den im_num/im_den", exponents ascending.
// Lines starting with '#' and blank lines are ignored on input.
std::string to_text(const SparseSeries& f);
SparseSeries parse_series_text(std::string_view text);

// "z^3/27 + 1" style rendering for reports.
std::string to_pretty(const SparseSeries& f);

}  // namespace hypercyc

#endif  // HYPERCYC_SERIES_HPP
