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

#include "hypercyc/gaussian.hpp"

#include <cctype>
#include <ostream>

#include "hypercyc/errors.hpp"

namespace hypercyc {

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("malformed integer '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational abs_value(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

Rational ratio(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw BadArgument("ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow2(long e) {
  Integer p;
  const unsigned long mag = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, mag);
  if (e >= 0) return Rational(p);
  return Rational(Integer(1), p);
}

Rational GaussianRational::box_modulus() const { return abs_value(re_) + abs_value(im_); }

Rational GaussianRational::max_modulus() const {
  Rational a = abs_value(re_);
  Rational b = abs_value(im_);
  return a < b ? b : a;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  if (sgn(rhs.im_) != 0) im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  if (sgn(rhs.im_) != 0) im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (is_real() && rhs.is_real()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator*=(const Rational& rhs) {
  re_ *= rhs;
  if (sgn(im_) != 0) im_ *= rhs;
  return *this;
}

GaussianRational& GaussianRational::operator/=(const Rational& rhs) {
  if (sgn(rhs) == 0) throw BadArgument("division of a Gaussian rational by zero");
  re_ /= rhs;
  if (sgn(im_) != 0) im_ /= rhs;
  return *this;
}

std::string GaussianRational::to_text() const {
  return format_rational(re_) + " " + format_rational(im_);
}

std::string GaussianRational::to_pretty() const {
  auto plain = [](const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
  };
  if (is_real()) return plain(re_);
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = plain(im_) + "i";
  }
  if (sgn(re_) == 0) return im_part;
  if (im_part.front() != '-') im_part.insert(im_part.begin(), '+');
  return plain(re_) + im_part;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.to_pretty(); }

}  // namespace hypercyc
