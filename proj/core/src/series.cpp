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

#include "hypercyc/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hypercyc/errors.hpp"

namespace hypercyc {

void SeriesBuilder::push(Exponent e, GaussianRational c) {
  if (c.is_zero()) return;
  if (!terms_.empty() && terms_.back().exponent >= e) {
    throw BadArgument("SeriesBuilder: exponents must be strictly increasing");
  }
  terms_.push_back({e, std::move(c)});
}

SparseSeries SparseSeries::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return SparseSeries(std::move(out));
}

SparseSeries SparseSeries::monomial(Exponent e, GaussianRational c) {
  if (c.is_zero()) return {};
  return SparseSeries(std::vector<Term>{{e, std::move(c)}});
}

std::optional<Exponent> SparseSeries::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().exponent;
}

std::optional<Exponent> SparseSeries::lowest_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exponent;
}

GaussianRational SparseSeries::coefficient(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.exponent < x; });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return {};
}

SparseSeries SparseSeries::operator-() const {
  std::vector<Term> out(terms_);
  for (auto& t : out) t.coeff = -t.coeff;
  return SparseSeries(std::move(out));
}

namespace {

template <typename Combine>
SparseSeries merge(const SparseSeries& a, const SparseSeries& b, Combine combine) {
  SeriesBuilder out;
  out.reserve(a.size() + b.size());
  auto x = a.terms().begin();
  auto y = b.terms().begin();
  while (x != a.terms().end() || y != b.terms().end()) {
    if (y == b.terms().end() || (x != a.terms().end() && x->exponent < y->exponent)) {
      out.push(x->exponent, x->coeff);
      ++x;
    } else if (x == a.terms().end() || y->exponent < x->exponent) {
      out.push(y->exponent, combine(GaussianRational(), y->coeff));
      ++y;
    } else {
      out.push(x->exponent, combine(x->coeff, y->coeff));
      ++x;
      ++y;
    }
  }
  return std::move(out).build();
}

}  // namespace

SparseSeries operator+(const SparseSeries& a, const SparseSeries& b) {
  return merge(a, b, [](GaussianRational u, const GaussianRational& v) { return u += v; });
}

SparseSeries operator-(const SparseSeries& a, const SparseSeries& b) {
  return merge(a, b, [](GaussianRational u, const GaussianRational& v) { return u -= v; });
}

SparseSeries operator*(const SparseSeries& a, const SparseSeries& b) { return multiply(a, b); }

SparseSeries SparseSeries::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  std::vector<Term> out(terms_);
  for (auto& t : out) t.coeff *= c;
  return SparseSeries(std::move(out));
}

bool PolyClassSpec::contains(const SparseSeries& p) const {
  for (const auto& t : p.terms()) {
    if (t.exponent >= k) return false;
    if (t.coeff.box_modulus() > c) return false;
  }
  return true;
}

std::set<Exponent> support(const SparseSeries& f) {
  std::set<Exponent> s;
  for (const auto& t : f.terms()) s.insert(s.end(), t.exponent);
  return s;
}

Integer factorial(std::uint64_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer falling_factorial(std::uint64_t m, std::uint64_t n) {
  if (n == 0) return 1;
  if (n == 1) return Integer(m + 1);
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), m + n, n);
  return binom * factorial(n);
}

namespace {

// (m+n)!/m! with n! shared across the terms of one call.
class FallingFactorials {
 public:
  explicit FallingFactorials(std::uint64_t n) : n_(n) {}
  Integer operator()(std::uint64_t m) {
    if (n_ == 0) return 1;
    if (n_ == 1) return Integer(m + 1);
    if (!have_fact_) {
      n_fact_ = factorial(n_);
      have_fact_ = true;
    }
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), m + n_, n_);
    return binom * n_fact_;
  }

 private:
  std::uint64_t n_;
  Integer n_fact_ = 1;
  bool have_fact_ = false;
};

}  // namespace

SparseSeries derivative_n(const SparseSeries& f, std::uint64_t n) {
  if (n == 0) return f;
  FallingFactorials ff(n);
  SeriesBuilder out;
  for (const auto& t : f.terms()) {
    if (t.exponent < n) continue;
    const Exponent m = t.exponent - n;
    out.push(m, t.coeff * Rational(ff(m)));
  }
  return std::move(out).build();
}

SparseSeries volterra_n(const SparseSeries& f, std::uint64_t n) {
  if (n == 0) return f;
  FallingFactorials ff(n);
  SeriesBuilder out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    out.push(t.exponent + n, t.coeff / Rational(ff(t.exponent)));
  }
  return std::move(out).build();
}

namespace {

// Walks the terms in order, keeping a^e up to date incrementally.
template <typename Visit>
void for_each_weighted(const SparseSeries& f, std::uint64_t a, Visit visit) {
  if (a == 0) throw BadArgument("norm base must be positive");
  Integer weight = 1;
  Exponent at = 0;
  Integer step;
  for (const auto& t : f.terms()) {
    if (a != 1 && t.exponent != at) {
      mpz_ui_pow_ui(step.get_mpz_t(), a, t.exponent - at);
      weight *= step;
      at = t.exponent;
    }
    visit(t, weight);
  }
}

}  // namespace

NormBounds graded_norm_bounds(const SparseSeries& f, std::uint64_t a) {
  NormBounds nb{Rational(0), Rational(0), a};
  for_each_weighted(f, a, [&](const Term& t, const Integer& w) {
    Rational re = abs_value(t.coeff.re());
    Rational im = abs_value(t.coeff.im());
    if (re < im) std::swap(re, im);
    Rational lo = re * w;
    nb.lower += lo;
    nb.upper += lo;
    if (sgn(im) != 0) nb.upper += im * w;
  });
  return nb;
}

Rational upper_norm(const SparseSeries& f, std::uint64_t a) {
  Rational sum = 0;
  for_each_weighted(f, a, [&](const Term& t, const Integer& w) {
    sum += t.coeff.box_modulus() * w;
  });
  return sum;
}

SparseSeries multiply(const SparseSeries& f, const SparseSeries& g) {
  if (f.is_zero() || g.is_zero()) return {};
  if (f.size() == 1 && g.size() == 1) {
    return SparseSeries::monomial(f.terms()[0].exponent + g.terms()[0].exponent,
                                  f.terms()[0].coeff * g.terms()[0].coeff);
  }
  const Exponent lo = *f.lowest_exponent() + *g.lowest_exponent();
  const Exponent hi = *f.degree() + *g.degree();
  const std::uint64_t products = static_cast<std::uint64_t>(f.size()) * g.size();
  SeriesBuilder out;
  if (hi - lo <= 4 * products + 64) {
    // Dense accumulator over the exponent window.
    std::vector<GaussianRational> acc(hi - lo + 1);
    std::vector<char> touched(hi - lo + 1, 0);
    for (const auto& x : f.terms()) {
      for (const auto& y : g.terms()) {
        const auto slot = x.exponent + y.exponent - lo;
        acc[slot] += x.coeff * y.coeff;
        touched[slot] = 1;
      }
    }
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (touched[i]) out.push(lo + i, std::move(acc[i]));
    }
  } else {
    std::map<Exponent, GaussianRational> acc;
    for (const auto& x : f.terms()) {
      for (const auto& y : g.terms()) acc[x.exponent + y.exponent] += x.coeff * y.coeff;
    }
    for (auto& [e, c] : acc) out.push(e, std::move(c));
  }
  return std::move(out).build();
}

SparseSeries power(const SparseSeries& f, std::uint64_t b) {
  if (b == 0) throw BadArgument("power: exponent must be positive");
  SparseSeries result;
  bool have = false;
  SparseSeries base = f;
  while (true) {
    if (b & 1U) {
      result = have ? multiply(result, base) : base;
      have = true;
    }
    b >>= 1U;
    if (b == 0) break;
    base = multiply(base, base);
  }
  return result;
}

SparseSeries linear_combine(std::span<const std::pair<GaussianRational, SparseSeries>> pairs) {
  std::map<Exponent, GaussianRational> acc;
  for (const auto& [c, f] : pairs) {
    if (c.is_zero()) continue;
    for (const auto& t : f.terms()) acc[t.exponent] += c * t.coeff;
  }
  SeriesBuilder out;
  for (auto& [e, c] : acc) out.push(e, std::move(c));
  return std::move(out).build();
}

SparseSeries compose_poly(const SparseSeries& p, const SparseSeries& f) {
  std::vector<std::pair<GaussianRational, SparseSeries>> parts;
  parts.reserve(p.size());
  SparseSeries f_pow;  // f^at, valid once at > 0
  Exponent at = 0;
  for (const auto& t : p.terms()) {
    if (t.exponent == 0) {
      parts.emplace_back(t.coeff, SparseSeries::constant(GaussianRational(1)));
      continue;
    }
    const Exponent gap = t.exponent - at;
    f_pow = at == 0 ? power(f, gap) : multiply(f_pow, power(f, gap));
    at = t.exponent;
    parts.emplace_back(t.coeff, f_pow);
  }
  return linear_combine(parts);
}

SparseSeries shift_down(const SparseSeries& f, Exponent m) {
  SeriesBuilder out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.exponent < m) {
      throw SupportTooLow("shift_down by " + std::to_string(m) + ": exponent " +
                          std::to_string(t.exponent) + " is in the support");
    }
    out.push(t.exponent - m, t.coeff);
  }
  return std::move(out).build();
}

std::string to_text(const SparseSeries& f) {
  std::string out;
  for (const auto& t : f.terms()) {
    out += std::to_string(t.exponent);
    out += ' ';
    out += t.coeff.to_text();
    out += '\n';
  }
  return out;
}

SparseSeries parse_series_text(std::string_view text) {
  SeriesBuilder out;
  std::optional<Exponent> last;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string line(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string e_txt, re_txt, im_txt, extra;
    if (!(fields >> e_txt >> re_txt >> im_txt) || (fields >> extra)) {
      throw ParseError("series line " + std::to_string(line_no) + ": expected 'e re im'");
    }
    if (e_txt.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("series line " + std::to_string(line_no) + ": bad exponent");
    }
    const Exponent e = std::stoull(e_txt);
    if (last && e <= *last) {
      throw ParseError("series line " + std::to_string(line_no) + ": exponents must ascend");
    }
    GaussianRational c(parse_rational(re_txt), parse_rational(im_txt));
    if (c.is_zero()) {
      throw ParseError("series line " + std::to_string(line_no) + ": zero coefficient");
    }
    out.push(e, std::move(c));
    last = e;
  }
  return std::move(out).build();
}

std::string to_pretty(const SparseSeries& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    std::string c = it->coeff.to_pretty();
    const bool compound = !it->coeff.is_real() && sgn(it->coeff.re()) != 0;
    const bool negative = !compound && c.front() == '-';
    if (negative) c.erase(c.begin());
    if (compound) c = "(" + c + ")";
    std::string mono;
    if (it->exponent == 0) {
      mono = c;
    } else {
      const std::string z = it->exponent == 1 ? "z" : "z^" + std::to_string(it->exponent);
      mono = c == "1" ? z : c + "*" + z;
    }
    if (first) {
      out += negative ? "-" + mono : mono;
    } else {
      out += negative ? " - " : " + ";
      out += mono;
    }
    first = false;
  }
  return out;
}

}  // namespace hypercyc
