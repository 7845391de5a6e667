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

#ifndef SPDLAB_MEASURE_H_
#define SPDLAB_MEASURE_H_

#include <cstdint>
#include <vector>

#include "spdlab/poly.h"

namespace spdlab {

// Dimension of the span of {shift * g : deg(shift) <= ell, g an order-k
// partial derivative of poly}, shifts ranging over the poly's nvars.
struct MeasureJob {
  uint32_t k = 0;
  uint32_t ell = 0;
  Polynomial poly;
};

struct MeasureCaps {
  uint64_t max_rows = 200'000;
  uint64_t max_cols = 200'000;
  // Dense elimination stores rows * cols residues.
  uint64_t max_cells = 50'000'000;
};

inline constexpr MeasureCaps kOracleCaps = {10'000, 10'000, 100'000'000};

struct MeasureResult {
  uint64_t dim = 0;
  uint64_t num_derivatives = 0;
  uint64_t rows = 0;
  uint64_t cols = 0;
  double elapsed_ms = 0;
};

// Distinct nonzero order-k derivatives, by differentiating monomial in
// grlex-descending order of the monomial (first occurrence kept).
struct DerivativeSet {
  std::vector<Monomial> by;
  std::vector<Polynomial> polys;
};
DerivativeSet enumerate_derivatives(const Polynomial& p, uint32_t k);

// All monomials of degree <= ell in nvars variables, grlex descending.
// Throws MatrixTooLarge beyond `cap`.
std::vector<Monomial> shift_monomials(uint32_t nvars, uint32_t ell, uint64_t cap);

// Rank of the (derivative x shift) coefficient matrix by dense Gaussian
// elimination; prime fields use the dispatched SIMD row kernels.
MeasureResult spd_dimension(const MeasureJob& job, const MeasureCaps& caps = {});

// Same quantity by an independent route: derivatives taken one variable at a
// time, monomial columns in ascending lexicographic order, rows inserted one
// by one into a sparse reduced basis. Tiny instances only.
MeasureResult spd_oracle(const MeasureJob& job, const MeasureCaps& caps = kOracleCaps);

// Rank of a dense row-major matrix over GF(p^k). The matrix is destroyed.
uint64_t dense_rank(const FieldSpec& f, std::vector<uint32_t>& cells, uint64_t rows,
                    uint64_t cols);

}  // namespace spdlab

#endif  // SPDLAB_MEASURE_H_
