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


#include <gtest/gtest.h>

#include "hypercyc/algebra.hpp"
#include "hypercyc/enumeration.hpp"
#include "hypercyc/random.hpp"

namespace hypercyc {
namespace {

SparseSeries mono(Exponent e, GaussianRational c = GaussianRational(1)) { return SparseSeries::monomial(e, c); }
GaussianRational q(long num, long den) { return GaussianRational(ratio(Integer(num), Integer(den))); }
const GaussianRational kC(ratio(Integer(1), Integer(3)), ratio(Integer(-1), Integer(2)));

TEST(Blocks, QBlockExamples) {
  const SparseSeries p = SparseSeries::constant(2) + mono(3, kC);
  EXPECT_EQ(q_block({1, p}, 4), volterra_n(p, 16));
  EXPECT_EQ(q_block({2, SparseSeries::constant(1)}, 2), mono(4, q(1, 360)));
  EXPECT_EQ(q_block({1, SparseSeries::constant(kC)}, 3), mono(9, kC * ratio(Integer(1), factorial(9))));
  EXPECT_THROW(q_block({1, p}, 1), BadArgument);
  EXPECT_THROW(q_block({0, p}, 3), BadArgument);
}

TEST(Blocks, RBlockExamples) {
  EXPECT_EQ(r_block({1, SparseSeries::constant(kC)}, 3), mono(3, q(1, 27)) + mono(9, kC * q(1, 362880)));
  EXPECT_EQ(r_block({1, SparseSeries()}, 3), mono(3, q(1, 27)));
  EXPECT_EQ(r_block({2, SparseSeries::constant(1)}, 2), mono(2, q(1, 4)) + mono(4, q(1, 360)));
}

TEST(Blocks, TwoRoutesAgreeOnGrid) {
  SeriesGenerator gen(11);
  for (std::uint64_t d = 1; d <= 4; ++d) {
    for (std::uint64_t n = 2; n <= 8; ++n) {
      for (int rep = 0; rep < 3; ++rep) {
        const AlphaPair alpha{d, gen.series({5, 6, 20, 9})};
        ASSERT_EQ(q_block(alpha, n), q_block_via_volterra(alpha, n)) << d << " " << n;
      }
    }
  }
}

TEST(Blocks, ExplicitQBoundOnGrid) {
  SeriesGenerator gen(12);
  for (std::uint64_t d = 1; d <= 3; ++d) {
    for (std::uint64_t n = 2; n <= 8; ++n) {
      const AlphaPair alpha{d, gen.series({4, 5, 6, 2})};
      const std::uint64_t k = poly_class_index(alpha.p);
      ASSERT_TRUE((PolyClassSpec{k, Rational(k)}.contains(alpha.p)));
      for (std::uint64_t a = 1; a <= 3; ++a) {
        EXPECT_LE(upper_norm(q_block(alpha, n), a), q_block_bound(k, d, n, a));
      }
    }
  }
}

TEST(Blocks, PolyClassIndex) {
  EXPECT_EQ(poly_class_index(SparseSeries()), 1u);
  EXPECT_EQ(poly_class_index(SparseSeries::constant(1)), 1u);
  EXPECT_EQ(poly_class_index(mono(2, q(1, 2))), 3u);
  EXPECT_EQ(poly_class_index(SparseSeries::constant(GaussianRational(Rational(3), ratio(Integer(1), Integer(2))))),
            4u);
}

TEST(Lemma, Quantities) {
  const LemmaQuantities base = lemma_quantities({1, SparseSeries::constant(kC)}, 3, 1, SparseSeries::constant(1), 1, 2);
  EXPECT_EQ(base.target_defect.upper, Rational(0));
  EXPECT_FALSE(base.high_derivative.has_value());

  const LemmaQuantities two = lemma_quantities({2, SparseSeries::constant(1)}, 2, 1, SparseSeries(), 1, 3);
  EXPECT_EQ(two.block_norm.upper, ratio(Integer(1), Integer(4)) + ratio(Integer(1), Integer(360)));
  EXPECT_EQ(two.product_derivative.upper, Rational(0));
  ASSERT_TRUE(two.high_derivative.has_value());
  EXPECT_EQ(two.high_derivative->upper, Rational(0));

  EXPECT_THROW(high_derivative_quantity({1, SparseSeries::constant(1)}, 3, 1, SparseSeries::constant(1), 1),
               BadArgument);
  EXPECT_THROW(lemma_quantities({1, SparseSeries()}, 3, 1, SparseSeries(), 0, 1), BadArgument);
  const NormBounds hd = high_derivative_quantity({2, mono(0) + mono(1)}, 4, 2, mono(0) + mono(1), 1);
  ASSERT_TRUE(lemma_quantities({2, mono(0) + mono(1)}, 4, 2, mono(0) + mono(1), 1, 4).high_derivative.has_value());
  EXPECT_EQ(hd.upper, lemma_quantities({2, mono(0) + mono(1)}, 4, 2, mono(0) + mono(1), 1, 4).high_derivative->upper);
}

TEST(Conditions, FirstStep) {
  const ConditionReport rep = check_step_conditions({}, 1, 3);
  EXPECT_TRUE(rep.passed);
  EXPECT_FALSE(rep.first_failure.has_value());
  EXPECT_FALSE(check_step_conditions({}, 1, 2).passed);  // (a1) with n_0 = 2
  EXPECT_THROW(check_step_conditions({}, 2, 5), BadArgument);
}

TEST(Extend, BaseCaseAndCap) {
  const AlgebraState s = extend({}, 10);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.steps[0].n, 3u);
  EXPECT_EQ(s.steps[0].block, mono(3, q(1, 27)));
  EXPECT_EQ(derivative_n(s.partial, 9), entry(1).p);
  EXPECT_LT(upper_norm(s.steps[0].block, 1), ratio(Integer(1), Integer(2)));
  EXPECT_THROW(extend({}, 0), SearchCapExceeded);

  const ConditionReport again = check_step_conditions(s, 2, 3);
  EXPECT_FALSE(again.passed);
  ASSERT_TRUE(again.first_failure.has_value());
  EXPECT_EQ(again.first_failure->condition, Comparison::Condition::kA1);
}

TEST(Extend, SecondStepIsMinimal) {
  const AlgebraState one = construct(1, 10);
  const AlgebraState two = extend(one, 50);
  const std::uint64_t n2 = two.steps[1].n;
  EXPECT_TRUE(check_step_conditions(one, 2, n2).passed);
  for (std::uint64_t c = 4; c < n2; ++c) EXPECT_FALSE(check_step_conditions(one, 2, c).passed) << c;
  try {
    extend(one, n2 - 4);
    FAIL() << "expected SearchCapExceeded";
  } catch (const SearchCapExceeded& e) {
    EXPECT_EQ(e.last_report().candidate, n2 - 1);
    EXPECT_TRUE(e.last_report().first_failure.has_value());
  }
}

class ThreeSteps : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { state_ = new AlgebraState(construct(3, 200)); }
  static void TearDownTestSuite() {
    delete state_;
    state_ = nullptr;
  }
  static const AlgebraState& state() { return *state_; }

 private:
  static AlgebraState* state_;
};
AlgebraState* ThreeSteps::state_ = nullptr;

TEST_F(ThreeSteps, PrefixAndInvariants) {
  const AlgebraState two = construct(2, 200);
  ASSERT_EQ(state().size(), 3u);
  EXPECT_EQ(two.steps[0], state().steps[0]);
  EXPECT_EQ(two.steps[1], state().steps[1]);
  SparseSeries sum;
  for (std::size_t i = 0; i < 3; ++i) {
    const StepRecord& s = state().steps[i];
    if (i) EXPECT_GT(s.n, state().steps[i - 1].n);
    EXPECT_EQ(s.nu, s.n * s.n + (s.d - 1) * s.n);
    EXPECT_LE(upper_norm(s.block, i + 1), pow2(-static_cast<long>(i + 1)));
    for (const auto& c : s.certificates) EXPECT_TRUE(c.holds());
    sum = sum + s.block;
  }
  EXPECT_EQ(sum, state().partial);
}

TEST_F(ThreeSteps, CertificatesReverify) {
  const VerificationResult v = verify_state(state());
  EXPECT_TRUE(v.ok) << v.detail;
}

TEST_F(ThreeSteps, TamperingIsDetected) {
  AlgebraState bad = state();
  bad.steps[1].certificates[3].lhs += 1;
  EXPECT_FALSE(verify_state(bad).ok);

  bad = state();
  bad.steps[2].certificates.pop_back();
  EXPECT_FALSE(verify_state(bad).ok);

  bad = state();
  bad.steps[0].block = bad.steps[0].block + mono(40, q(1, 1000000));
  EXPECT_FALSE(verify_state(bad).ok);

  bad = state();
  bad.partial = bad.partial + mono(0, 1);
  EXPECT_FALSE(verify_state(bad).ok);

  bad = state();
  bad.steps[1].certificates.push_back(bad.steps[1].certificates.front());
  EXPECT_FALSE(verify_state(bad).ok);
}

TEST_F(ThreeSteps, DefectBoundsForMonomials) {
  for (std::uint64_t k = 1; k <= 3; ++k) {
    const SparseSeries p = mono(state().steps[k - 1].d);
    for (std::uint64_t m = 1; m <= k; ++m) {
      const NormBounds nb = algebra_defect(state(), p, k, m);
      EXPECT_LE(nb.upper, pow2(1 - static_cast<long>(k))) << k << " " << m;
      EXPECT_EQ(algebra_defect_bound(p, k), pow2(1 - static_cast<long>(k)));
    }
  }
}

TEST_F(ThreeSteps, DefectBoundsWithLowerTerms) {
  const GaussianRational unit_box(ratio(Integer(1), Integer(2)), ratio(Integer(-1), Integer(2)));
  for (std::uint64_t k = 1; k <= 3; ++k) {
    const std::uint64_t d = state().steps[k - 1].d;
    const SparseSeries p = mono(d) + SparseSeries::constant(unit_box);
    for (std::uint64_t m = 1; m <= k; ++m) {
      EXPECT_LE(algebra_defect(state(), p, k, m).upper, Rational(2 * pow2(1 - static_cast<long>(k))));
    }
  }
  EXPECT_EQ(algebra_defect_bound(mono(3) + mono(1, kC) + SparseSeries::constant(9), 2),
            Rational(ratio(Integer(1), Integer(2)) * (1 + kC.box_modulus())));
}

TEST_F(ThreeSteps, DefectArgumentChecks) {
  EXPECT_THROW(algebra_defect(state(), mono(1, 2), 1, 1), BadArgument);      // not monic
  EXPECT_THROW(algebra_defect(state(), mono(1), 4, 1), BadArgument);         // k > K
  EXPECT_THROW(algebra_defect(state(), mono(1), 2, 1), BadArgument);         // d_2 = 2
  EXPECT_THROW(algebra_defect(state(), mono(1), 1, 2), BadArgument);         // m > k
  EXPECT_THROW(algebra_defect(state(), SparseSeries::constant(1), 1, 1), BadArgument);
}

TEST(Defect, SingleStepIsExact) {
  const AlgebraState s = construct(1, 10);
  const NormBounds nb = algebra_defect(s, mono(1), 1, 1);
  EXPECT_EQ(nb.lower, Rational(0));
  EXPECT_EQ(nb.upper, Rational(0));
}

TEST(Conditions, Names) {
  for (auto c : {Comparison::Condition::kA1, Comparison::Condition::kA2, Comparison::Condition::kA3,
                 Comparison::Condition::kA4, Comparison::Condition::kA4Target}) {
    EXPECT_EQ(parse_condition_name(condition_name(c)), c);
  }
  EXPECT_THROW(parse_condition_name("a5"), ParseError);
}

}  // namespace
}  // namespace hypercyc
