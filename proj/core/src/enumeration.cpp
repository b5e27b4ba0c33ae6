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

#include "hypercyc/enumeration.hpp"

#include <cmath>
#include <limits>

#include "hypercyc/errors.hpp"

namespace hypercyc {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t triangular(std::uint64_t w) {
  const u128 t = static_cast<u128>(w) * (w + 1) / 2;
  return static_cast<std::uint64_t>(t);
}

// Largest w with w(w+1)/2 <= x.
std::uint64_t triangular_root(std::uint64_t x) {
  auto w = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(x) + 1.0L) - 1.0L) / 2.0L);
  while (static_cast<u128>(w) * (w + 1) / 2 > x) --w;
  while (static_cast<u128>(w + 1) * (w + 2) / 2 <= x) ++w;
  return w;
}

Integer to_integer(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

}  // namespace

std::uint64_t pair(std::uint64_t m, std::uint64_t j) {
  if (m == 0 || j == 0) throw BadArgument("pair: arguments are one-based");
  const u128 t = static_cast<u128>(m) + j - 2;
  const u128 value = t * (t + 1) / 2 + j;
  if (value > std::numeric_limits<std::uint64_t>::max()) throw BadArgument("pair: overflow");
  return static_cast<std::uint64_t>(value);
}

std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t k) {
  if (k == 0) throw BadArgument("unpair: argument is one-based");
  const std::uint64_t w = triangular_root(k - 1);
  const std::uint64_t j = k - triangular(w);
  return {w + 2 - j, j};
}

Integer pair(const Integer& m, const Integer& j) {
  if (m < 1 || j < 1) throw BadArgument("pair: arguments are one-based");
  const Integer t = m + j - 2;
  return t * (t + 1) / 2 + j;
}

std::pair<Integer, Integer> unpair(const Integer& k) {
  if (k < 1) throw BadArgument("unpair: argument is one-based");
  Integer disc = 8 * (k - 1) + 1;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  const Integer w = (root - 1) / 2;
  const Integer j = k - w * (w + 1) / 2;
  return {w + 2 - j, j};
}

namespace {

std::pair<Integer, Integer> unpair0(const Integer& x) {
  auto [m, j] = unpair(Integer(x + 1));
  return {m - 1, j - 1};
}

Integer pair0(const Integer& u, const Integer& v) { return pair(Integer(u + 1), Integer(v + 1)) - 1; }

// Stern-Brocot node t >= 1 -> positive rational.
Rational stern_brocot_value(const Integer& t) {
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer p = 1, q = 1;
  const auto bits = mpz_sizeinbase(t.get_mpz_t(), 2);
  for (std::size_t b = bits - 1; b-- > 0;) {
    if (mpz_tstbit(t.get_mpz_t(), b)) {
      p0 = p;
      q0 = q;
    } else {
      p1 = p;
      q1 = q;
    }
    p = p0 + p1;
    q = q0 + q1;
  }
  return ratio(p, q);
}

// Positive rational -> Stern-Brocot node, via the subtractive Euclid path
// compressed into runs.
Integer stern_brocot_index(const Rational& q) {
  Integer a = q.get_num();
  Integer b = q.get_den();
  Integer t = 1;
  while (a != b) {
    if (a < b) {
      Integer run = b / a;
      if (b % a == 0) run -= 1;
      b -= run * a;
      t <<= run.get_ui();
    } else {
      Integer run = a / b;
      if (a % b == 0) run -= 1;
      a -= run * b;
      const auto r = run.get_ui();
      t <<= r;
      t += (Integer(1) << r) - 1;
    }
  }
  return t;
}

}  // namespace

Rational rational_from_index(const Integer& x) {
  if (x < 0) throw BadArgument("rational_from_index: negative index");
  if (x == 0) return 0;
  if (mpz_odd_p(x.get_mpz_t())) return stern_brocot_value(Integer((x + 1) / 2));
  return -stern_brocot_value(Integer(x / 2));
}

Integer index_of_rational(const Rational& q) {
  if (sgn(q) == 0) return 0;
  if (sgn(q) > 0) return 2 * stern_brocot_index(q) - 1;
  return 2 * stern_brocot_index(Rational(-q));
}

GaussianRational gaussian_from_index(const Integer& x) {
  auto [u, v] = unpair0(x);
  return {rational_from_index(u), rational_from_index(v)};
}

Integer index_of_gaussian(const GaussianRational& g) {
  return pair0(index_of_rational(g.re()), index_of_rational(g.im()));
}

SparseSeries raw_poly(const Integer& i) {
  if (i < 1) throw BadArgument("raw_poly: index is one-based");
  Integer x = i - 1;
  std::vector<Integer> codes;
  while (x > 0) {
    auto [u, v] = unpair0(Integer(x - 1));
    codes.push_back(std::move(u));
    x = std::move(v);
  }
  SeriesBuilder out;
  for (std::size_t e = 0; e < codes.size(); ++e) {
    const bool leading = e + 1 == codes.size();
    out.push(e, gaussian_from_index(leading ? Integer(codes[e] + 1) : codes[e]));
  }
  return std::move(out).build();
}

SparseSeries raw_poly(std::uint64_t i) { return raw_poly(to_integer(i)); }

Integer index_of_poly(const SparseSeries& p) {
  if (p.is_zero()) return 1;
  const Exponent top = *p.degree();
  Integer x = 0;
  for (Exponent e = top + 1; e-- > 0;) {
    Integer code = index_of_gaussian(p.coefficient(e));
    if (e == top) code -= 1;
    x = pair0(code, x) + 1;
  }
  return x + 1;
}

SparseSeries dense_poly(std::uint64_t j) {
  const auto [i, l] = unpair(j);
  (void)l;
  SparseSeries t = raw_poly(i);
  if (PolyClassSpec{j, Rational(to_integer(j))}.contains(t)) return t;
  return {};
}

EnumerationEntry entry(std::uint64_t k) {
  const auto [m, j] = unpair(k);
  return {k, m, dense_poly(j)};
}

ClassIndices class_indices(std::uint64_t d, std::size_t count) {
  ClassIndices out;
  out.first = pair(d, 1);
  out.members.reserve(count);
  for (std::uint64_t j = 1; j <= count; ++j) out.members.push_back(pair(d, j));
  return out;
}

bool is_class_minimum(std::uint64_t k) { return unpair(k).second == 1; }

}  // namespace hypercyc
