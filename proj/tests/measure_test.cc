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

#include "spdlab/measure.h"

#include <algorithm>
#include <functional>
#include <vector>

#include "gtest/gtest.h"
#include "spdlab/bounds.h"
#include "spdlab/error.h"
#include "spdlab/kernels/rowops.h"
#include "spdlab/random.h"
#include "spdlab/rng.h"
#include "test_util.h"

namespace spdlab {
namespace {

using testing::make_poly;
using testing::mono;

Polynomial x0x1_plus_x2x3(const FieldSpec& f) {
  return make_poly(f, 4, {{1, {{0, 1}, {1, 1}}}, {1, {{2, 1}, {3, 1}}}});
}

TEST(EnumerateDerivatives, Examples) {
  const FieldSpec f = construct_field(7, 1);
  const Polynomial p = make_poly(f, 2, {{1, {{0, 2}, {1, 1}}}});
  const DerivativeSet d1 = enumerate_derivatives(p, 1);
  ASSERT_EQ(d1.polys.size(), 2u);
  EXPECT_EQ(d1.polys[0], make_poly(f, 2, {{2, {{0, 1}, {1, 1}}}}));
  EXPECT_EQ(d1.polys[1], make_poly(f, 2, {{1, {{0, 2}}}}));

  const DerivativeSet d0 = enumerate_derivatives(p, 0);
  ASSERT_EQ(d0.polys.size(), 1u);
  EXPECT_EQ(d0.polys[0], p);

  const DerivativeSet d = enumerate_derivatives(x0x1_plus_x2x3(f), 1);
  ASSERT_EQ(d.polys.size(), 4u);
  EXPECT_EQ(d.polys[0], make_poly(f, 4, {{1, {{1, 1}}}}));
  EXPECT_EQ(d.polys[1], make_poly(f, 4, {{1, {{0, 1}}}}));
  EXPECT_EQ(d.polys[2], make_poly(f, 4, {{1, {{3, 1}}}}));
  EXPECT_EQ(d.polys[3], make_poly(f, 4, {{1, {{2, 1}}}}));
}

TEST(EnumerateDerivatives, DuplicatesRemoved) {
  const FieldSpec f = construct_field(7, 1);
  // d/dx0 and d/dx1 of x0 x2 + x1 x2 both equal x2.
  const Polynomial p = make_poly(f, 3, {{1, {{0, 1}, {2, 1}}}, {1, {{1, 1}, {2, 1}}}});
  EXPECT_EQ(enumerate_derivatives(p, 1).polys.size(), 2u);
}

TEST(SpdDimension, Examples) {
  const FieldSpec f = construct_field(7, 1);
  const Polynomial p = x0x1_plus_x2x3(f);
  EXPECT_EQ(spd_dimension({1, 0, p}).dim, 4u);
  const MeasureResult r = spd_dimension({1, 1, p});
  EXPECT_EQ(r.dim, 14u);
  EXPECT_EQ(r.rows, 20u);
  EXPECT_EQ(r.cols, 14u);
  EXPECT_EQ(spd_dimension({2, 3, Polynomial(f, 4)}).dim, 0u);
  EXPECT_EQ(spd_dimension({3, 1, p}).dim, 0u);
}

TEST(SpdOracle, SingleMonomial) {
  const FieldSpec f = construct_field(11, 1);
  const Polynomial p = make_poly(f, 2, {{1, {{0, 5}}}});
  for (uint32_t k = 0; k <= 5; ++k) {
    EXPECT_EQ(spd_oracle({k, 0, p}).dim, 1u);
    EXPECT_EQ(spd_dimension({k, 0, p}).dim, 1u);
  }
}

TEST(SpdDimension, AgreesWithOracle) {
  for (const FieldSpec& f : {construct_field(7, 1), construct_field(2, 2), construct_field(65521, 1)}) {
    for (uint64_t seed = 0; seed < 50; ++seed) {
      SplitMix64 rng(seed, 3);
      const auto nvars = static_cast<uint32_t>(1 + rng.below(4));
      const Polynomial p = random_polynomial(f, nvars, 4, 1 + rng.below(8), rng);
      const auto k = static_cast<uint32_t>(rng.below(3));
      const auto ell = static_cast<uint32_t>(rng.below(3));
      EXPECT_EQ(spd_dimension({k, ell, p}).dim, spd_oracle({k, ell, p}).dim)
          << f.name() << " seed " << seed;
    }
  }
}

TEST(SpdDimension, ResultInvariants) {
  const FieldSpec f = construct_field(13, 1);
  SplitMix64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial p = random_polynomial(f, 3, 4, 6, rng);
    uint64_t prev = 0;
    for (uint32_t ell = 0; ell <= 3; ++ell) {
      const MeasureResult r = spd_dimension({1, ell, p});
      EXPECT_LE(r.dim, std::min(r.rows, r.cols));
      EXPECT_GE(r.dim, prev);  // non-decreasing in ell
      prev = r.dim;
      EXPECT_EQ(spd_dimension({1, ell, p.scaled(f.from_int(5))}).dim, r.dim);
    }
  }
}

TEST(SpdDimension, SubAdditive) {
  const FieldSpec f = construct_field(31, 1);
  SplitMix64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial a = random_polynomial(f, 4, 4, 5, rng);
    const Polynomial b = random_polynomial(f, 4, 4, 5, rng);
    for (uint32_t k : {1u, 2u}) {
      const uint64_t da = spd_dimension({k, 1, a}).dim;
      const uint64_t db = spd_dimension({k, 1, b}).dim;
      EXPECT_LE(spd_dimension({k, 1, a + b}).dim, da + db);
    }
  }
}

TEST(SpdDimension, LowDegreeBoundDominates) {
  const FieldSpec f = construct_field(101, 1);
  SplitMix64 rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<uint32_t> deg(2 + rng.below(3));
    for (auto& d : deg) d = static_cast<uint32_t>(1 + rng.below(2));
    const ProductGate g = random_product(f, 3, deg, 2, rng);
    Polynomial p = Polynomial::constant(f, 3, f.one());
    for (const auto& q : g.factors) p = p * q;
    const auto k = static_cast<uint32_t>(1 + rng.below(2));
    const auto ell = static_cast<uint32_t>(rng.below(3));
    std::sort(deg.rbegin(), deg.rend());
    BoundInputs in;
    in.d = static_cast<double>(deg.size());
    in.k = k;
    in.N = 3;
    in.ell = ell;
    in.D = 0;
    for (uint32_t i = 0; i < k && i < deg.size(); ++i) in.D += deg[i];
    const BoundReport b = lowdeg_bound(in);
    ASSERT_TRUE(b.exact.has_value());
    EXPECT_LE(mpq_class(spd_dimension({k, ell, p}).dim), *b.exact);
  }
}

TEST(SpdDimension, MatrixCap) {
  const FieldSpec f = construct_field(7, 1);
  MeasureCaps tiny;
  tiny.max_rows = 10;
  try {
    spd_dimension({1, 2, x0x1_plus_x2x3(f)}, tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMatrixTooLarge);
    EXPECT_TRUE(e.is_resource_cap());
  }
}

TEST(ShiftMonomials, CountAndOrder) {
  const auto s = shift_monomials(4, 2, 1000);
  EXPECT_EQ(s.size(), 15u);  // C(4 + 2, 2)
  EXPECT_EQ(s.front().degree(), 2u);
  EXPECT_TRUE(s.back().is_one());
}

TEST(DenseRank, IdentityAndDependentRows) {
  const FieldSpec f = construct_field(5, 1);
  std::vector<uint32_t> id = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  EXPECT_EQ(dense_rank(f, id, 3, 3), 3u);
  std::vector<uint32_t> m = {1, 2, 3,   //
                             2, 4, 1,   // 2 * row0
                             0, 1, 1};
  EXPECT_EQ(dense_rank(f, m, 3, 3), 2u);
  std::vector<uint32_t> r1 = {1, 2, 3,   //
                              2, 4, 1,   // 2 * row0
                              3, 1, 4};  // row0 + row1
  EXPECT_EQ(dense_rank(f, r1, 3, 3), 1u);
}

// The rank must not depend on which row-operation kernel runs.
TEST(DenseRank, IndependentOfKernel) {
  const kernels::Isa saved = kernels::active_isa();
  SplitMix64 rng(55);
  for (uint32_t p : {2u, 3u, 251u, 32749u, 65521u}) {
    const FieldSpec f = construct_field(p, 1);
    for (int trial = 0; trial < 10; ++trial) {
      const uint64_t rows = 1 + rng.below(40), cols = 1 + rng.below(40);
      std::vector<uint32_t> base(rows * cols);
      for (auto& c : base) c = static_cast<uint32_t>(rng.below(std::min<uint64_t>(p, 3)));
      std::vector<uint64_t> ranks;
      for (kernels::Isa isa : {kernels::Isa::kScalar, kernels::Isa::kAvx2}) {
        if (!kernels::isa_supported(isa)) continue;
        kernels::force_isa(isa);
        std::vector<uint32_t> m = base;
        ranks.push_back(dense_rank(f, m, rows, cols));
      }
      for (uint64_t r : ranks) EXPECT_EQ(r, ranks.front());
    }
  }
  kernels::force_isa(saved);
}

}  // namespace
}  // namespace spdlab
