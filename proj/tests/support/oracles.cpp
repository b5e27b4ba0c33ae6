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


#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

Dense to_dense(const SparseSeries& f) {
  Dense d;
  for (const auto& t : f.terms()) {
    if (d.size() <= t.exponent) d.resize(t.exponent + 1, Complex{0, 0});
    d[t.exponent] = {t.coeff.re(), t.coeff.im()};
  }
  return d;
}

SparseSeries from_dense(const Dense& d) {
  std::vector<hypercyc::Term> terms;
  for (std::size_t e = 0; e < d.size(); ++e) {
    if (d[e].re != 0 || d[e].im != 0) terms.push_back({e, hypercyc::GaussianRational(d[e].re, d[e].im)});
  }
  return SparseSeries::from_terms(std::move(terms));
}

Dense derivative(Dense f, std::uint64_t n) {
  for (std::uint64_t s = 0; s < n && !f.empty(); ++s) {
    Dense g(f.size() - 1, Complex{0, 0});
    for (std::size_t e = 1; e < f.size(); ++e) {
      g[e - 1] = {f[e].re * static_cast<long>(e), f[e].im * static_cast<long>(e)};
    }
    f = std::move(g);
  }
  return f;
}

Dense volterra(Dense f, std::uint64_t n) {
  for (std::uint64_t s = 0; s < n; ++s) {
    Dense g(f.size() + 1, Complex{0, 0});
    for (std::size_t e = 0; e < f.size(); ++e) {
      g[e + 1] = {f[e].re / static_cast<long>(e + 1), f[e].im / static_cast<long>(e + 1)};
    }
    f = std::move(g);
  }
  return f;
}

Dense multiply(const Dense& f, const Dense& g) {
  if (f.empty() || g.empty()) return {};
  Dense h(f.size() + g.size() - 1, Complex{0, 0});
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      h[i + j].re += f[i].re * g[j].re - f[i].im * g[j].im;
      h[i + j].im += f[i].re * g[j].im + f[i].im * g[j].re;
    }
  }
  return h;
}

Dense add(const Dense& f, const Dense& g) {
  Dense h(std::max(f.size(), g.size()), Complex{0, 0});
  for (std::size_t i = 0; i < f.size(); ++i) {
    h[i].re += f[i].re;
    h[i].im += f[i].im;
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    h[i].re += g[i].re;
    h[i].im += g[i].im;
  }
  return h;
}

namespace {

Integer power_of(std::uint64_t a, std::uint64_t e) {
  Integer r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= a;
  return r;
}

}  // namespace

Rational box_norm(const Dense& f, std::uint64_t a) {
  Rational s = 0;
  for (std::size_t e = 0; e < f.size(); ++e) s += (abs(f[e].re) + abs(f[e].im)) * power_of(a, e);
  return s;
}

Rational max_norm(const Dense& f, std::uint64_t a) {
  Rational s = 0;
  for (std::size_t e = 0; e < f.size(); ++e) s += std::max(abs(f[e].re), abs(f[e].im)) * power_of(a, e);
  return s;
}

std::vector<std::uint64_t> beta_scan(std::size_t K) {
  std::vector<std::uint64_t> b{1};
  while (b.size() < K) {
    const std::uint64_t prev = b.back(), k = b.size();
    for (std::uint64_t n = prev + k + 1;; ++n) {
      Integer lhs, rhs;
      mpz_ui_pow_ui(lhs.get_mpz_t(), n, prev);
      mpz_ui_pow_ui(rhs.get_mpz_t(), 2, n);
      if (lhs <= rhs) {
        b.push_back(n);
        break;
      }
    }
  }
  return b;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> diagonal_walk(std::uint64_t count) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t s = 2; out.size() < count; ++s) {
    for (std::uint64_t j = 1; j < s && out.size() < count; ++j) out.emplace_back(s - j, j);
  }
  return out;
}

std::vector<Rational> stern_brocot_nodes(std::size_t count) {
  // Node t carries the interval (lo, hi) whose mediant it is; children 2t
  // (left) and 2t + 1 (right).
  struct Node {
    Integer lp, lq, hp, hq;
  };
  std::vector<Node> nodes{{0, 1, 1, 0}};
  std::vector<Rational> values;
  for (std::size_t t = 0; values.size() < count; ++t) {
    const Node n = nodes[t];
    const Integer p = n.lp + n.hp, q = n.lq + n.hq;
    Rational v(p, q);
    v.canonicalize();
    values.push_back(v);
    nodes.push_back({n.lp, n.lq, p, q});
    nodes.push_back({p, q, n.hp, n.hq});
  }
  return values;
}

namespace {

std::pair<std::uint64_t, std::uint64_t> unpair0(std::uint64_t x) {
  static const auto walk = diagonal_walk(200000);
  if (x >= walk.size()) throw std::out_of_range("oracle unpair0");
  return {walk[x].first - 1, walk[x].second - 1};
}

Rational rational_of(std::uint64_t x) {
  static const auto tree = stern_brocot_nodes(200000);
  if (x == 0) return 0;
  const std::uint64_t t = (x + 1) / 2;
  if (t - 1 >= tree.size()) throw std::out_of_range("oracle rational_of");
  return x % 2 == 1 ? tree[t - 1] : Rational(-tree[t - 1]);
}

hypercyc::GaussianRational gaussian_of(std::uint64_t x) {
  const auto [u, v] = unpair0(x);
  return hypercyc::GaussianRational(rational_of(u), rational_of(v));
}

}  // namespace

SparseSeries raw_poly(std::uint64_t i) {
  std::vector<std::uint64_t> digits;
  for (std::uint64_t x = i - 1; x > 0;) {
    const auto [u, v] = unpair0(x - 1);
    digits.push_back(u);
    x = v;
  }
  if (digits.empty()) return {};
  std::vector<hypercyc::Term> terms;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    const bool leading = j + 1 == digits.size();
    hypercyc::GaussianRational c = gaussian_of(leading ? digits[j] + 1 : digits[j]);
    if (!c.is_zero()) terms.push_back({j, c});
  }
  return SparseSeries::from_terms(std::move(terms));
}

}  // namespace oracle
