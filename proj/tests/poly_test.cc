// Copyright 2026 The spdlab Authors.
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

#include "spdlab/poly.h"

#include <vector>

#include "gtest/gtest.h"
#include "spdlab/error.h"
#include "spdlab/random.h"
#include "spdlab/rng.h"
#include "test_util.h"

namespace spdlab {
namespace {

using testing::make_poly;
using testing::mono;

TEST(PolyArithmetic, AdditionCancels) {
  const FieldSpec f = construct_field(5, 1);
  const Polynomial a = make_poly(f, 2, {{1, {{0, 1}}}, {1, {{1, 1}}}});
  const Polynomial b = make_poly(f, 2, {{-1, {{1, 1}}}});
  EXPECT_EQ(a + b, make_poly(f, 2, {{1, {{0, 1}}}}));
  EXPECT_EQ((a + b).sparsity(), 1u);
}

TEST(PolyArithmetic, DifferenceOfSquares) {
  const FieldSpec f = construct_field(5, 1);
  const Polynomial a = make_poly(f, 2, {{1, {{0, 1}}}, {1, {{1, 1}}}});
  const Polynomial b = make_poly(f, 2, {{1, {{0, 1}}}, {-1, {{1, 1}}}});
  EXPECT_EQ(a * b, make_poly(f, 2, {{1, {{0, 2}}}, {-1, {{1, 2}}}}));
}

TEST(PolyArithmetic, MultiplicationMatchesDoubleLoop) {
  const FieldSpec f = construct_field(7, 1);
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial a = random_polynomial(f, 4, 4, 16, rng);
    const Polynomial b = random_polynomial(f, 4, 4, 16, rng);
    Polynomial oracle(f, 4);
    for (const auto& [ma, ca] : a.terms()) {
      for (const auto& [mb, cb] : b.terms()) oracle.add_term(ma * mb, f.mul(ca, cb));
    }
    EXPECT_EQ(a * b, oracle);
  }
}

TEST(PolyArithmetic, FieldMismatch) {
  const Polynomial a = make_poly(construct_field(5, 1), 2, {{1, {{0, 1}}}});
  const Polynomial b = make_poly(construct_field(7, 1), 2, {{1, {{0, 1}}}});
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFieldMismatch);
  }
}

TEST(PolyArithmetic, RingAxioms) {
  const FieldSpec f = construct_field(7, 1);
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = random_polynomial(f, 4, 3, 5, rng);
    const Polynomial b = random_polynomial(f, 4, 3, 5, rng);
    const Polynomial c = random_polynomial(f, 4, 3, 5, rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) + c, a + (b + c));
  }
}

TEST(Derivative, Examples) {
  const FieldSpec f = construct_field(7, 1);
  const Polynomial p = make_poly(f, 2, {{1, {{0, 2}, {1, 1}}}});
  EXPECT_EQ(derivative(p, mono({{0, 1}})), make_poly(f, 2, {{2, {{0, 1}, {1, 1}}}}));

  const Polynomial q = make_poly(f, 4, {{1, {{0, 1}, {1, 1}}}, {1, {{2, 1}, {3, 1}}}});
  EXPECT_EQ(derivative(q, mono({{0, 1}, {1, 1}})), make_poly(f, 4, {{1, {}}}));

  const FieldSpec f3 = construct_field(3, 1);
  const Polynomial cube = make_poly(f3, 1, {{1, {{0, 3}}}});
  EXPECT_TRUE(derivative(cube, mono({{0, 2}})).is_zero());
}

TEST(Derivative, NotDividingGivesZero) {
  const FieldSpec f = construct_field(7, 1);
  const Polynomial p = make_poly(f, 3, {{1, {{0, 1}}}});
  EXPECT_TRUE(derivative(p, mono({{1, 1}})).is_zero());
}

TEST(Derivative, Composition) {
  const FieldSpec f = construct_field(11, 1);
  SplitMix64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = random_polynomial(f, 3, 5, 8, rng);
    const Monomial m1 = random_monomial(3, 1 + rng.below(2), rng);
    const Monomial m2 = random_monomial(3, 1 + rng.below(2), rng);
    EXPECT_EQ(derivative(derivative(p, m2), m1), derivative(p, m1 * m2));
  }
}

TEST(Distance, Examples) {
  const Monomial m = mono({{0, 2}, {3, 1}});
  EXPECT_EQ(distance(m, m), 0u);
  EXPECT_EQ(distance(mono({{0, 2}, {1, 1}}), mono({{0, 1}, {1, 1}, {2, 1}})), 1u);
  EXPECT_EQ(distance(mono({{0, 1}, {1, 1}}), mono({{2, 1}, {3, 1}})), 2u);
}

TEST(Distance, SymmetricAndZeroOnlyOnEqual) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Monomial a = random_monomial(3, rng.below(4), rng);
    const Monomial b = random_monomial(3, rng.below(4), rng);
    EXPECT_EQ(distance(a, b), distance(b, a));
    if (a.degree() == b.degree()) {
      EXPECT_EQ(distance(a, b) == 0, a == b);
    }
  }
}

TEST(LeadingMonomial, Grlex) {
  const FieldSpec f = construct_field(5, 1);
  EXPECT_EQ(leading_monomial(make_poly(f, 2, {{1, {{0, 1}}}, {1, {{1, 1}}}})), mono({{0, 1}}));
  EXPECT_EQ(leading_monomial(make_poly(f, 2, {{1, {{1, 2}}}, {1, {{0, 1}, {1, 1}}}})),
            mono({{0, 1}, {1, 1}}));
  EXPECT_EQ(leading_monomial(make_poly(f, 3, {{1, {}}, {1, {{2, 3}}}})), mono({{2, 3}}));
}

TEST(LeadingMonomial, ZeroPolynomial) {
  try {
    leading_monomial(Polynomial(construct_field(5, 1), 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroPolynomial);
  }
}

TEST(LeadingMonomial, MultiplicativeWithoutCancellation) {
  const FieldSpec f = construct_field(7, 1);
  SplitMix64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial a = random_polynomial(f, 3, 3, 4, rng);
    const Polynomial b = random_polynomial(f, 3, 3, 4, rng);
    if (a.is_zero() || b.is_zero()) continue;
    const Monomial lm = leading_monomial(a) * leading_monomial(b);
    const Polynomial ab = a * b;
    if (ab.coefficient(lm) == f.zero()) continue;
    EXPECT_EQ(leading_monomial(ab), lm);
  }
}

TEST(Checks, Examples) {
  const FieldSpec f = construct_field(5, 1);
  const PolyChecks c = checks(make_poly(f, 3, {{1, {{0, 1}, {1, 1}}}, {1, {{2, 2}}}}));
  ASSERT_TRUE(c.degree.has_value());
  EXPECT_EQ(*c.degree, 2u);
  EXPECT_TRUE(c.is_homogeneous);
  EXPECT_EQ(c.sparsity, 2u);
  EXPECT_FALSE(checks(make_poly(f, 2, {{1, {{0, 1}}}, {1, {{1, 2}}}})).is_homogeneous);
  const PolyChecks zero = checks(Polynomial(f, 2));
  EXPECT_EQ(zero.sparsity, 0u);
  EXPECT_FALSE(zero.degree.has_value());
  EXPECT_TRUE(zero.is_homogeneous);
  EXPECT_EQ(degree_or_minus_one(Polynomial(f, 2)), -1);
}

TEST(Eval, Examples) {
  const FieldSpec f = construct_field(7, 1);
  const Polynomial p = make_poly(f, 3, {{1, {{0, 1}, {1, 1}}}, {1, {{2, 1}}}});
  const std::vector<FieldElement> pt = {f.from_int(2), f.from_int(3), f.from_int(1)};
  EXPECT_EQ(eval(p, pt), f.zero());
  EXPECT_EQ(eval(Polynomial(f, 3), pt), f.zero());
  const std::vector<FieldElement> short_pt = {f.one()};
  try {
    eval(p, short_pt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArityMismatch);
  }
}

TEST(Eval, MatchesTermByTerm) {
  const FieldSpec f = construct_field(13, 1);
  SplitMix64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = random_polynomial(f, 4, 5, 20, rng);
    std::vector<FieldElement> pt;
    for (int i = 0; i < 4; ++i) pt.push_back(f.from_int(rng.below(13)));
    FieldElement sum = f.zero();
    for (const auto& [m, c] : p.terms()) {
      FieldElement v = c;
      for (const auto& [var, e] : m.entries()) v = f.mul(v, f.pow(pt[var], e));
      sum = f.add(sum, v);
    }
    EXPECT_EQ(eval(p, pt), sum);
  }
}

}  // namespace
}  // namespace spdlab
