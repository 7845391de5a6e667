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

#include "spdlab/hardpoly.h"

#include <cmath>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "spdlab/error.h"
#include "spdlab/reduce.h"
#include "spdlab/rng.h"

namespace spdlab {
namespace {

uint64_t ipow(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

TEST(NwTN, TwoConstants) {
  const Polynomial p = gen_nw_t_n(2, 1);
  ASSERT_EQ(p.sparsity(), 2u);
  const uint32_t a[] = {x_index(2, 1, 1), x_index(2, 2, 1)};
  const uint32_t b[] = {x_index(2, 1, 2), x_index(2, 2, 2)};
  EXPECT_EQ(p.coefficient(Monomial::from_variables(a)), p.field().one());
  EXPECT_EQ(p.coefficient(Monomial::from_variables(b)), p.field().one());
}

TEST(NwTN, TermCounts) {
  for (uint32_t n : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (uint32_t t = 1; t <= n; ++t) {
      const uint64_t expected = n / (2 * t) == 0 ? 0 : ipow(n, n / (2 * t));
      if (expected > 100000) continue;
      const Polynomial p = gen_nw_t_n(n, t);
      EXPECT_EQ(p.sparsity(), expected) << n << "," << t;
      EXPECT_EQ(p.nvars(), n * n);
      for (const auto& [m, c] : p.terms()) {
        EXPECT_EQ(m.degree(), n);
        EXPECT_EQ(c, p.field().one());
        for (const auto& [v, e] : m.entries()) EXPECT_EQ(e, 1u);
      }
    }
  }
}

TEST(NwTN, Errors) {
  EXPECT_THROW(gen_nw_t_n(6, 1), Error);
  try {
    gen_nw_t_n(9, 1, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooManyMonomials);
  }
}

TEST(NwN, DegreeAndCount) {
  const uint32_t n = 3;
  const Polynomial p = gen_nw_n(n);
  EXPECT_EQ(p.nvars(), n * n + n);
  uint64_t expected = 0;
  for (uint32_t t = 1; t <= n; ++t) expected += n / (2 * t) ? ipow(n, n / (2 * t)) : 0;
  EXPECT_EQ(p.sparsity(), expected);
  const PolyChecks c = checks(p);
  EXPECT_TRUE(c.is_homogeneous);
  EXPECT_EQ(*c.degree, n + 1);
}

TEST(GenP, SizesAndExpansion) {
  const PInstance a = gen_P(4, 2, 1, true);
  EXPECT_EQ(a.params.t_tilde, 2u);
  ASSERT_EQ(a.circuit.top_fanin(), 1u);
  for (const auto& q : a.circuit.gates()[0].factors) EXPECT_EQ(q.sparsity(), 16u);
  ASSERT_TRUE(a.expanded);
  EXPECT_EQ(a.expanded->sparsity(), 256u);
  for (const auto& [m, c] : a.expanded->terms()) EXPECT_EQ(c, a.expanded->field().one());

  const PInstance b = gen_P(4, 4, 1, true);
  EXPECT_EQ(b.params.t_tilde, 1u);
  EXPECT_EQ(b.expanded->sparsity(), 16u);
}

TEST(GenP, ShortLastBlockStillDegreeN) {
  const PInstance p = gen_P(5, 2, 1, true);
  EXPECT_EQ(p.params.blocks.back().size(), 1u);
  EXPECT_EQ(*checks(*p.expanded).degree, 5u);
}

TEST(Blocks, Partition) {
  const HardPolyParams h = HardPolyParams::make(9, 4, 1);
  EXPECT_EQ(h.t_tilde, 3u);
  EXPECT_EQ(h.blocks[0], (std::vector<uint32_t>{1, 2, 3, 4}));
  EXPECT_EQ(h.blocks[2], (std::vector<uint32_t>{9}));
  const auto pre = h.prefix(1, 2);
  EXPECT_EQ(std::vector<uint32_t>(pre.begin(), pre.end()), (std::vector<uint32_t>{5, 6}));
  EXPECT_EQ(h.sp_size(), 81u);
}

TEST(IndexMonomials, Degenerate) {
  const HardPolyParams h = HardPolyParams::make(4, 2, 1);
  const auto [m, mp] = index_monomials(h, {3, 7});
  EXPECT_EQ(m, mp);
  EXPECT_TRUE((m / mp).is_one());
}

TEST(IndexMonomials, Degrees) {
  const HardPolyParams h = HardPolyParams::make(8, 4, 1);
  const auto [m, mp] = index_monomials(h, {5, 60});
  EXPECT_EQ(m.degree(), 8u);
  EXPECT_EQ(mp.degree(), 4u);
  EXPECT_EQ((m / mp).degree(), 4u);
}

TEST(IndexMonomials, DividesForRandomTuples) {
  const HardPolyParams h = HardPolyParams::make(9, 3, 1);
  SplitMix64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    TupleIndex f(h.t_tilde);
    for (auto& s : f) s = rng.below(h.sp_size());
    const auto [m, mp] = index_monomials(h, f);
    EXPECT_TRUE(mp.divides(m));
    EXPECT_EQ(m.degree(), 9u);
    EXPECT_EQ(mp.degree(), 2u * h.t_tilde);
  }
}

TEST(IndexMonomials, BlockTooSmall) {
  const HardPolyParams h = HardPolyParams::make(5, 2, 1);
  try {
    index_monomials(h, {0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBlockTooSmall);
  }
}

TEST(DerivativeLemma, Exhaustive8_4_1) {
  const PInstance p = gen_P(8, 4, 1, true);
  const auto checks_all = verify_derivative_all(p.params, *p.expanded);
  ASSERT_EQ(checks_all.size(), 4096u);
  for (const auto& c : checks_all) ASSERT_TRUE(c.pass) << c.tuple_number;
}

TEST(DerivativeLemma, Exhaustive4_2_1IsConstantOne) {
  const PInstance p = gen_P(4, 2, 1, true);
  const auto checks_all = verify_derivative_all(p.params, *p.expanded);
  ASSERT_EQ(checks_all.size(), 256u);
  const Polynomial one = Polynomial::constant(p.expanded->field(), p.expanded->nvars(),
                                              p.expanded->field().one());
  for (const auto& c : checks_all) {
    EXPECT_TRUE(c.pass);
    EXPECT_EQ(c.derivative, one);
  }
}

TEST(DerivativeLemma, FaultInjectionTouchesOneTuple) {
  const PInstance p = gen_P(8, 4, 1, true);
  for (uint64_t drop : {0ull, 1000ull, 4095ull}) {
    Polynomial broken = *p.expanded;
    auto it = broken.terms().begin();
    std::advance(it, drop);
    const Monomial removed = it->first;
    broken.add_term(removed, broken.field().neg(it->second));
    uint64_t failures = 0;
    for (const auto& c : verify_derivative_all(p.params, broken)) {
      if (c.pass) continue;
      ++failures;
      EXPECT_EQ(index_monomials(p.params, tuple_from_number(p.params, c.tuple_number)).first,
                removed);
    }
    EXPECT_EQ(failures, 1u);
  }
}

TEST(NiceSet, Alphabet16) {
  const NiceSet s = gen_nice_set(4, 1, 4, 0.5);
  EXPECT_EQ(s.alphabet.q(), 16u);
  EXPECT_EQ(s.message_length, 2u);
  EXPECT_EQ(s.codewords.size(), 256u);
  const std::set<TupleIndex> distinct(s.codewords.begin(), s.codewords.end());
  EXPECT_EQ(distinct.size(), 256u);
  EXPECT_GE(min_pairwise_distance(s.codewords), 2u);
  EXPECT_EQ(min_pairwise_distance(s.codewords), 3u);  // t~ - message length + 1
  for (const auto& w : s.codewords) {
    for (uint64_t sym : w) EXPECT_LT(sym, 16u);
  }
}

TEST(NiceSet, AlphaZeroIsInjective) {
  const NiceSet s = gen_nice_set(2, 1, 3, 0.0);
  EXPECT_EQ(s.codewords.size(), 64u);
  EXPECT_GE(min_pairwise_distance(s.codewords), 1u);
}

TEST(NiceSet, SizeMatchesCorollaryUpToFloor) {
  const NiceSet s = gen_nice_set(4, 1, 5, 0.5);
  EXPECT_EQ(s.message_length, 2u);  // floor(2.5)
  EXPECT_EQ(s.codewords.size(), 256u);
  EXPECT_LE(static_cast<double>(s.codewords.size()), std::pow(4.0, 0.5 * 2 * 5));
}

TEST(NiceSet, Errors) {
  try {
    gen_nice_set(2, 0, 2, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthExceedsField);
  }
  EXPECT_THROW(gen_nice_set(4, 1, 2, 0.9), Error);  // message length 0
}

TEST(DistanceLemma, Exhaustive8_4_1) {
  const HardPolyParams h = HardPolyParams::make(8, 4, 1);
  const DistanceVerdict v = verify_distance_lemma(h, 0.5);
  EXPECT_EQ(v.bound, 1);
  EXPECT_FALSE(v.degenerate);
  EXPECT_EQ(v.pairs_checked, 64u * 63 / 2);
  EXPECT_EQ(v.violations, 0u);
  EXPECT_TRUE(v.pass);
  EXPECT_GE(v.min_distance, 1u);
}

TEST(DistanceLemma, DegenerateBound) {
  const HardPolyParams h = HardPolyParams::make(9, 3, 1);
  const DistanceVerdict v = verify_distance_lemma(h, 2.0 / 3.0);
  EXPECT_EQ(v.bound, 0);
  EXPECT_TRUE(v.degenerate);
  EXPECT_TRUE(v.pass);
}

TEST(BlockAgreement, Exhaustive8_4_1) {
  const BlockAgreement b = verify_block_agreement(HardPolyParams::make(8, 4, 1));
  EXPECT_TRUE(b.pass);
  EXPECT_GE(b.min_difference, 3u);
}

TEST(GenQ, ProjectionRecoversP) {
  const QInstance q = gen_Q(16, 2, 3);
  EXPECT_EQ(q.circuit.top_fanin(), 4u);
  EXPECT_LE(q.circuit.top_fanin(), std::ceil(std::log(16) / std::log(2)) + 1);
  const CircuitStats s = stats(q.circuit);
  EXPECT_TRUE(s.homogeneous);
  EXPECT_EQ(s.degree, 17u);
  for (uint32_t i = 0; i <= 3; ++i) {
    const Depth4Circuit projected = project(q.circuit, q_selector(q, i));
    EXPECT_TRUE(equivalent(projected, q.summands[i], 20, i).equal()) << "i=" << i;
  }
}

TEST(GenQ, SmallProjectionExact) {
  const QInstance q = gen_Q(4, 2, 2);
  for (uint32_t i = 0; i <= 2; ++i) {
    const Depth4Circuit projected = project(q.circuit, q_selector(q, i));
    EXPECT_EQ(expand(projected), expand(q.summands[i])) << "i=" << i;
  }
}

}  // namespace
}  // namespace spdlab
