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

#ifndef HYPERCYC_GAUSSIAN_HPP
#define HYPERCYC_GAUSSIAN_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace hypercyc {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical "num/den" text, denominator always present ("3/1", "-1/2").
std::string format_rational(const Rational& q);

// Accepts "num/den" or a bare integer. Throws ParseError on malformed input
// or a zero denominator. The result is canonicalised.
Rational parse_rational(std::string_view text);

// num/den in lowest terms. Throws BadArgument when den is zero.
Rational ratio(const Integer& num, const Integer& den);
Rational abs_value(const Rational& q);

// 2^e for a possibly negative exponent.
Rational pow2(long e);

// An element of Q(i). Both components are kept in lowest terms, so equality
// is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {  // NOLINT
    re_.canonicalize();
  }
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  // |re| + |im|: an upper bound for the modulus, at most sqrt(2) times it.
  Rational box_modulus() const;
  // max(|re|, |im|): a lower bound for the modulus.
  Rational max_modulus() const;

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator*=(const Rational& rhs);
  GaussianRational& operator/=(const Rational& rhs);

  friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs += rhs;
  }
  friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs -= rhs;
  }
  friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs *= rhs;
  }
  friend GaussianRational operator*(GaussianRational lhs, const Rational& rhs) {
    return lhs *= rhs;
  }
  friend GaussianRational operator/(GaussianRational lhs, const Rational& rhs) {
    return lhs /= rhs;
  }
  GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // "re_num/re_den im_num/im_den"
  std::string to_text() const;
  // Short human form: "3/2", "-i", "1/2+3i".
  std::string to_pretty() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

}  // namespace hypercyc

#endif  // HYPERCYC_GAUSSIAN_HPP
