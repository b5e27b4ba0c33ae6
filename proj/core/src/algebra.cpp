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

#include "hypercyc/algebra.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "hypercyc/enumeration.hpp"

namespace hypercyc {

namespace {

Integer int_pow(std::uint64_t base, std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void require_block_args(const AlphaPair& alpha, std::uint64_t n) {
  if (n < 2) throw BadArgument("block index n must be at least 2");
  if (alpha.d == 0) throw BadArgument("alpha.d must be positive");
}

std::uint64_t block_order(std::uint64_t d, std::uint64_t n) { return n * n + (d - 1) * n; }

Rational threshold(std::uint64_t k) { return pow2(-static_cast<long>(k)); }

}  // namespace

SparseSeries q_block(const AlphaPair& alpha, std::uint64_t n) {
  require_block_args(alpha, n);
  const std::uint64_t shift = (alpha.d - 1) * n;
  const Rational factor = ratio(int_pow(n, shift), Integer(alpha.d));
  SeriesBuilder out;
  for (const auto& t : alpha.p.terms()) {
    const std::uint64_t j = t.exponent;
    const Rational w = factor * ratio(factorial(j), factorial(j + shift + n * n));
    out.push(j + n * n, t.coeff * w);
  }
  return std::move(out).build();
}

SparseSeries q_block_via_volterra(const AlphaPair& alpha, std::uint64_t n) {
  require_block_args(alpha, n);
  const std::uint64_t shift = (alpha.d - 1) * n;
  const Rational factor = ratio(int_pow(n, shift), Integer(alpha.d));
  return shift_down(volterra_n(alpha.p, block_order(alpha.d, n)).scaled(GaussianRational(factor)), shift);
}

SparseSeries r_block(const AlphaPair& alpha, std::uint64_t n) {
  require_block_args(alpha, n);
  const Rational lead(Integer(1), int_pow(n, n));
  return SparseSeries::monomial(n, GaussianRational(lead)) + q_block(alpha, n);
}

Rational q_block_bound(std::uint64_t k, std::uint64_t d, std::uint64_t n, std::uint64_t a) {
  const Integer num = 2 * factorial(k) * int_pow(n, (d - 1) * n) * int_pow(a, k + n * n);
  return ratio(num, factorial(n * n));
}

std::uint64_t poly_class_index(const SparseSeries& p) {
  std::uint64_t k = 1;
  for (const auto& t : p.terms()) {
    k = std::max<std::uint64_t>(k, t.exponent + 1);
    const Rational box = t.coeff.box_modulus();
    Integer ceil_box;
    mpz_cdiv_q(ceil_box.get_mpz_t(), box.get_num_mpz_t(), box.get_den_mpz_t());
    k = std::max<std::uint64_t>(k, ceil_box.get_ui());
  }
  return k;
}

LemmaQuantities lemma_quantities(const AlphaPair& alpha, std::uint64_t n, std::uint64_t a,
                                 const SparseSeries& h, std::uint64_t b, std::uint64_t nu) {
  if (b == 0) throw BadArgument("lemma_quantities: b must be positive");
  const SparseSeries r = r_block(alpha, n);
  const std::uint64_t order = block_order(alpha.d, n);
  const SparseSeries hr = multiply(h, power(r, b));
  LemmaQuantities q;
  q.block_norm = graded_norm_bounds(r, a);
  q.product_derivative = graded_norm_bounds(derivative_n(hr, nu), a);
  if (b < alpha.d) q.high_derivative = graded_norm_bounds(derivative_n(hr, order), a);
  q.target_defect = graded_norm_bounds(alpha.p - derivative_n(power(r, alpha.d), order), a);
  return q;
}

NormBounds high_derivative_quantity(const AlphaPair& alpha, std::uint64_t n, std::uint64_t a,
                                    const SparseSeries& h, std::uint64_t b) {
  if (b == 0 || b >= alpha.d) {
    throw BadArgument("high_derivative_quantity: requires 1 <= b < d");
  }
  const SparseSeries hr = multiply(h, power(r_block(alpha, n), b));
  return graded_norm_bounds(derivative_n(hr, block_order(alpha.d, n)), a);
}

std::string condition_name(Comparison::Condition c) {
  switch (c) {
    case Comparison::Condition::kA1: return "a1";
    case Comparison::Condition::kA2: return "a2";
    case Comparison::Condition::kA3: return "a3";
    case Comparison::Condition::kA4: return "a4";
    case Comparison::Condition::kA4Target: return "a4-target";
  }
  return "?";
}

Comparison::Condition parse_condition_name(const std::string& name) {
  if (name == "a1") return Comparison::Condition::kA1;
  if (name == "a2") return Comparison::Condition::kA2;
  if (name == "a3") return Comparison::Condition::kA3;
  if (name == "a4") return Comparison::Condition::kA4;
  if (name == "a4-target") return Comparison::Condition::kA4Target;
  throw ParseError("unknown condition '" + name + "'");
}

namespace {

std::uint64_t previous_n(const AlgebraState& state) { return state.steps.empty() ? 2 : state.steps.back().n; }

// What a step needs regardless of the candidate: the enumeration entry and
// the powers f_{m-1}^0 .. f_{m-1}^J.
struct StepContext {
  std::uint64_t m = 0;
  std::uint64_t d = 0;
  SparseSeries p;
  std::uint64_t prev_n = 0;
  std::uint64_t max_power = 0;
  std::vector<SparseSeries> prev_powers;
};

StepContext make_context(const AlgebraState& state, std::uint64_t m) {
  if (m != state.size() + 1) {
    throw BadArgument("check_step_conditions: state has " + std::to_string(state.size()) +
                      " steps, cannot evaluate step " + std::to_string(m));
  }
  StepContext ctx;
  ctx.m = m;
  const EnumerationEntry e = entry(m);
  ctx.d = e.d;
  ctx.p = e.p;
  ctx.prev_n = previous_n(state);
  ctx.max_power = std::max(m, ctx.d);
  ctx.prev_powers.reserve(ctx.max_power + 1);
  ctx.prev_powers.push_back(SparseSeries::constant(GaussianRational(1)));
  for (std::uint64_t j = 1; j <= ctx.max_power; ++j) {
    ctx.prev_powers.push_back(multiply(ctx.prev_powers.back(), state.partial));
  }
  return ctx;
}

ConditionReport evaluate(const StepContext& ctx, std::uint64_t candidate, const ResourceLimits& limits) {
  ConditionReport rep;
  rep.step = ctx.m;
  rep.candidate = candidate;
  const Rational bound = threshold(ctx.m);

  auto record = [&rep](Comparison c) {
    const bool ok = c.holds();
    rep.comparisons.push_back(std::move(c));
    if (!ok) rep.first_failure = rep.comparisons.back();
    return ok;
  };

  if (!record({Comparison::Condition::kA1, 0, 0, Rational(Integer(ctx.prev_n + 1)), Rational(Integer(candidate))})) {
    return rep;
  }
  if (candidate < 2) throw BadArgument("candidate must be at least 2");

  const std::uint64_t n = candidate;
  const std::uint64_t block_degree = std::max<std::uint64_t>(n, n * n + (ctx.p.is_zero() ? 0 : *ctx.p.degree()));
  const std::uint64_t prev_degree = ctx.prev_powers[1].degree().value_or(0);
  const std::uint64_t top = ctx.max_power * std::max(block_degree, prev_degree);
  if (top > limits.max_exponent) {
    throw ResourceCap("step " + std::to_string(ctx.m) + ", candidate " + std::to_string(n) +
                      ": powers reach degree " + std::to_string(top) + " (max_exponent " +
                      std::to_string(limits.max_exponent) + ")");
  }

  const SparseSeries r = r_block({ctx.d, ctx.p}, n);
  if (!record({Comparison::Condition::kA2, 0, 0, upper_norm(r, ctx.m), bound})) return rep;

  // diffs[j] = f_m^j - f_{m-1}^j = sum_{l<j} C(j,l) f_{m-1}^l r^{j-l}
  std::vector<SparseSeries> r_powers{SparseSeries::constant(GaussianRational(1)), r};
  for (std::uint64_t j = 2; j <= ctx.max_power; ++j) r_powers.push_back(multiply(r_powers.back(), r));
  std::vector<SparseSeries> diffs(ctx.max_power + 1);
  for (std::uint64_t j = 1; j <= ctx.max_power; ++j) {
    std::vector<std::pair<GaussianRational, SparseSeries>> parts;
    for (std::uint64_t l = 0; l < j; ++l) {
      parts.emplace_back(GaussianRational(Rational(binomial(j, l))), multiply(ctx.prev_powers[l], r_powers[j - l]));
    }
    diffs[j] = linear_combine(parts);
  }

  const std::uint64_t nu_k = block_order(ctx.d, n);
  for (std::uint64_t j = 1; j < ctx.d; ++j) {
    const SparseSeries fj = ctx.prev_powers[j] + diffs[j];
    if (!record({Comparison::Condition::kA4, j, nu_k, upper_norm(derivative_n(fj, nu_k), ctx.m), bound})) return rep;
  }
  {
    const SparseSeries fd = ctx.prev_powers[ctx.d] + diffs[ctx.d];
    if (!record({Comparison::Condition::kA4Target, ctx.d, nu_k,
                 upper_norm(ctx.p - derivative_n(fd, nu_k), ctx.m), bound})) {
      return rep;
    }
  }

  if (ctx.m >= 2) {
    const std::uint64_t sweep = ctx.prev_n * ctx.prev_n + ctx.m * ctx.prev_n;
    for (std::uint64_t j = 1; j <= ctx.m; ++j) {
      SparseSeries cur = diffs[j];
      for (std::uint64_t nu = 1; nu <= sweep; ++nu) {
        cur = derivative_n(cur, 1);
        if (!record({Comparison::Condition::kA3, j, nu, upper_norm(cur, ctx.m), bound})) return rep;
      }
    }
  }
  rep.passed = true;
  return rep;
}

AlgebraState append_step(const AlgebraState& state, const StepContext& ctx, ConditionReport rep) {
  AlgebraState next = state;
  StepRecord rec;
  rec.n = rep.candidate;
  rec.d = ctx.d;
  rec.nu = block_order(ctx.d, rec.n);
  rec.p = ctx.p;
  rec.block = r_block({ctx.d, ctx.p}, rec.n);
  rec.certificates = std::move(rep.comparisons);
  next.partial = state.partial + rec.block;
  next.steps.push_back(std::move(rec));
  return next;
}

}  // namespace

ConditionReport check_step_conditions(const AlgebraState& state, std::uint64_t m, std::uint64_t candidate,
                                      const ResourceLimits& limits) {
  return evaluate(make_context(state, m), candidate, limits);
}

AlgebraState extend(const AlgebraState& state, std::uint64_t search_cap, const ResourceLimits& limits) {
  const StepContext ctx = make_context(state, state.size() + 1);
  ConditionReport last;
  last.step = ctx.m;
  for (std::uint64_t cand = ctx.prev_n + 1; cand <= ctx.prev_n + search_cap; ++cand) {
    ConditionReport rep = evaluate(ctx, cand, limits);
    if (rep.passed) return append_step(state, ctx, std::move(rep));
    last = std::move(rep);
  }
  throw SearchCapExceeded("step " + std::to_string(ctx.m) + ": no n in (" + std::to_string(ctx.prev_n) + ", " +
                              std::to_string(ctx.prev_n + search_cap) + "] satisfies (a1)-(a4)",
                          std::move(last));
}

AlgebraState construct(std::uint64_t K, std::uint64_t search_cap, const ResourceLimits& limits) {
  if (K == 0) throw BadArgument("construct: K must be positive");
  AlgebraState state;
  while (state.size() < K) state = extend(state, search_cap, limits);
  return state;
}

VerificationResult verify_state(const AlgebraState& state) {
  auto fail = [](std::string why) { return VerificationResult{false, std::move(why)}; };
  using Key = std::tuple<Comparison::Condition, std::uint64_t, std::uint64_t>;

  SparseSeries prev;  // f_{k-1}
  for (std::uint64_t k = 1; k <= state.size(); ++k) {
    const StepRecord& rec = state.steps[k - 1];
    const std::string at = "step " + std::to_string(k) + ": ";
    const EnumerationEntry e = entry(k);
    if (rec.d != e.d || rec.p != e.p) return fail(at + "(d, p) differs from the enumeration");
    if (rec.n < 2) return fail(at + "n < 2");
    if (rec.nu != block_order(rec.d, rec.n)) return fail(at + "nu != n^2 + (d-1)n");
    const Rational lead(Integer(1), int_pow(rec.n, rec.n));
    const SparseSeries block =
        SparseSeries::monomial(rec.n, GaussianRational(lead)) + q_block_via_volterra({rec.d, rec.p}, rec.n);
    if (block != rec.block) return fail(at + "stored block differs from r_{alpha,n}");
    const SparseSeries cur = prev + block;
    const std::uint64_t prev_n = k == 1 ? 2 : state.steps[k - 2].n;
    const Rational bound = threshold(k);

    std::map<Key, const Comparison*> stored;
    for (const auto& c : rec.certificates) {
      if (!stored.emplace(Key{c.condition, c.j, c.nu}, &c).second) return fail(at + "duplicate certificate");
    }
    std::map<Key, Rational> expected_rhs;
    expected_rhs.emplace(Key{Comparison::Condition::kA1, 0, 0}, Rational(Integer(rec.n)));
    expected_rhs.emplace(Key{Comparison::Condition::kA2, 0, 0}, bound);
    for (std::uint64_t j = 1; j < rec.d; ++j) expected_rhs.emplace(Key{Comparison::Condition::kA4, j, rec.nu}, bound);
    expected_rhs.emplace(Key{Comparison::Condition::kA4Target, rec.d, rec.nu}, bound);
    if (k >= 2) {
      const std::uint64_t sweep = prev_n * prev_n + k * prev_n;
      for (std::uint64_t j = 1; j <= k; ++j) {
        for (std::uint64_t nu = 1; nu <= sweep; ++nu) expected_rhs.emplace(Key{Comparison::Condition::kA3, j, nu}, bound);
      }
    }
    if (stored.size() != expected_rhs.size()) {
      return fail(at + "expected " + std::to_string(expected_rhs.size()) + " certificates, found " +
                  std::to_string(stored.size()));
    }

    std::map<std::uint64_t, SparseSeries> cur_pow, prev_pow;
    auto pow_of = [](std::map<std::uint64_t, SparseSeries>& cache, const SparseSeries& f, std::uint64_t j) {
      auto it = cache.find(j);
      if (it == cache.end()) it = cache.emplace(j, power(f, j)).first;
      return it->second;
    };
    for (const auto& [key, rhs] : expected_rhs) {
      auto it = stored.find(key);
      if (it == stored.end()) return fail(at + "missing certificate " + condition_name(std::get<0>(key)));
      const Comparison& c = *it->second;
      const auto [cond, j, nu] = key;
      Rational lhs;
      switch (cond) {
        case Comparison::Condition::kA1: lhs = Rational(Integer(prev_n + 1)); break;
        case Comparison::Condition::kA2: lhs = upper_norm(block, k); break;
        case Comparison::Condition::kA3:
          lhs = upper_norm(derivative_n(pow_of(cur_pow, cur, j) - (prev.is_zero() ? SparseSeries() : pow_of(prev_pow, prev, j)), nu), k);
          break;
        case Comparison::Condition::kA4: lhs = upper_norm(derivative_n(pow_of(cur_pow, cur, j), nu), k); break;
        case Comparison::Condition::kA4Target:
          lhs = upper_norm(rec.p - derivative_n(pow_of(cur_pow, cur, j), nu), k);
          break;
      }
      const std::string label = at + condition_name(cond) + " j=" + std::to_string(j) + " nu=" + std::to_string(nu);
      if (c.lhs != lhs) return fail(label + ": stored lhs does not match recomputation");
      if (c.rhs != rhs) return fail(label + ": stored rhs does not match 2^-k");
      if (!(lhs <= rhs)) return fail(label + ": inequality does not hold");
    }
    prev = cur;
  }
  if (prev != state.partial) return fail("partial sum differs from the sum of blocks");
  return {};
}

NormBounds algebra_defect(const AlgebraState& state, const SparseSeries& p, std::uint64_t k, std::uint64_t m) {
  if (p.is_zero() || *p.degree() == 0) throw BadArgument("algebra_defect: p must be non-constant");
  if (p.terms().back().coeff != GaussianRational(1)) throw BadArgument("algebra_defect: p must be monic");
  if (k == 0 || k > state.size()) {
    throw BadArgument("algebra_defect: k=" + std::to_string(k) + " outside the constructed range");
  }
  if (m == 0 || m > k) throw BadArgument("algebra_defect: need 1 <= m <= k");
  const StepRecord& rec = state.steps[k - 1];
  if (*p.degree() != rec.d) {
    throw BadArgument("algebra_defect: deg p = " + std::to_string(*p.degree()) + " but d_k = " + std::to_string(rec.d));
  }
  return graded_norm_bounds(rec.p - derivative_n(compose_poly(p, state.partial), rec.nu), m);
}

Rational algebra_defect_bound(const SparseSeries& p, std::uint64_t k) {
  Rational s = 1;
  const Exponent d = p.degree().value_or(0);
  for (const auto& t : p.terms()) {
    if (t.exponent >= 1 && t.exponent < d) s += t.coeff.box_modulus();
  }
  return pow2(1 - static_cast<long>(k)) * s;
}

}  // namespace hypercyc
