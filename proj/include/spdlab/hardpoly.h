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

#ifndef SPDLAB_HARDPOLY_H_
#define SPDLAB_HARDPOLY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spdlab/circuit.h"
#include "spdlab/field.h"
#include "spdlab/formula.h"
#include "spdlab/poly.h"

namespace spdlab {

inline constexpr uint64_t kDefaultMonomialCap = 1'000'000;

// Variable layout shared by every family: x_{i,j} (i, j in [n]) sits at
// (i-1) n + (j-1), where j is identified with the field element of canonical
// index j-1. Extra selector variables follow at n^2 onwards.
uint32_t x_index(uint32_t n, uint32_t i, uint32_t j);

// Block structure and fields of a hard-polynomial instance.
struct HardPolyParams {
  uint32_t n = 0;
  uint32_t t = 0;
  uint32_t p = 0;
  uint32_t t_tilde = 0;                      // ceil(n / t)
  std::vector<std::vector<uint32_t>> blocks;  // C_1..C_t~ (1-based positions)
  FieldSpec index_field;                      // F_n, evaluation domain of S_p
  FieldSpec coeff_field;                      // GF(smallest prime > n)

  // Throws NotPrimePower unless n is a prime power, InvalidArgument unless
  // 1 <= t <= n.
  static HardPolyParams make(uint32_t n, uint32_t t, uint32_t p);

  // C_j^i: the i smallest elements of block j (0-based j).
  std::span<const uint32_t> prefix(uint32_t j, uint32_t i) const;
  // |S_p| = n^(p+1).
  uint64_t sp_size() const;
  // Number of tuples in S_p^t~ (saturating at UINT64_MAX).
  uint64_t tuple_count() const;
  uint32_t nvars() const { return n * n; }
};

// f in S_p is addressed by an index whose base-n digits (low first) are the
// coefficients c_0..c_p. Returns the canonical index of f(position - 1).
uint32_t sp_eval(const FieldSpec& f_n, uint32_t p, uint64_t s, uint32_t position);

// One S_p index per block.
using TupleIndex = std::vector<uint64_t>;

// Tuple number u in [0, |S_p|^t~), block 0 as the lowest base-|S_p| digit.
TupleIndex tuple_from_number(const HardPolyParams& params, uint64_t u);

// sum over f with deg f < floor(n/2t) of prod_i x_{i, f(i)} over GF(q') on
// n^2 variables. Zero when floor(n/2t) == 0. Throws TooManyMonomials when
// n^floor(n/2t) > cap, NotPrimePower for bad n.
Polynomial gen_nw_t_n(uint32_t n, uint32_t t, uint64_t cap = kDefaultMonomialCap);

// sum_{t=1..n} y_t NW_{t,n}, y_t at index n^2 + t - 1 (n^2 + n variables).
Polynomial gen_nw_n(uint32_t n, uint64_t cap = kDefaultMonomialCap);

struct PInstance {
  HardPolyParams params;
  // One gate whose j-th factor is sum_{f in S_p} prod_{i in C_j} x_{i, f(i)}.
  Depth4Circuit circuit;
  // Root product -> one sum per block -> one product per f -> variables.
  LayeredFormula formula{FieldSpec(), 0};
  std::optional<Polynomial> expanded;
};

// The block product P_{p,t,n}. Throws TooManyMonomials when a factor needs
// more than `cap` terms or when expansion is requested and n^((p+1) t~)
// exceeds `cap`.
PInstance gen_P(uint32_t n, uint32_t t, uint32_t p, bool expand,
                uint64_t cap = kDefaultMonomialCap, uint32_t nvars = 0);

// m = prod_j prod_{i in C_j} x_{i, f_j(i)} and m' over the prefixes C_j^{2p}.
// Throws BlockTooSmall when some block has fewer than 2p elements.
std::pair<Monomial, Monomial> index_monomials(const HardPolyParams& params,
                                              const TupleIndex& f_bar);

struct DerivativeCheck {
  uint64_t tuple_number = 0;
  bool pass = false;
  Monomial expected;     // m / m'
  Polynomial derivative; // d_{m'} P as computed
};

// d_{m'} P == m / m' with coefficient 1 for one tuple.
DerivativeCheck verify_derivative_lemma(const HardPolyParams& params, const Polynomial& p_expanded,
                                        const TupleIndex& f_bar);

// Every tuple of S_p^t~, in tuple-number order (parallel, deterministic).
std::vector<DerivativeCheck> verify_derivative_all(const HardPolyParams& params,
                                                   const Polynomial& p_expanded);

struct NiceSet {
  uint32_t n = 0;
  uint32_t p = 0;
  uint32_t t_tilde = 0;
  double alpha = 0;
  uint32_t message_length = 0;  // floor((1 - alpha) t~)
  FieldSpec alphabet;            // field of order n^(p+1)
  std::vector<TupleIndex> codewords;
};

// Reed-Solomon code over the field of order n^(p+1): messages of length
// floor((1 - alpha) t~) in canonical order, evaluated at the first t~ field
// elements. Throws LengthExceedsField unless t~ < n^(p+1), InvalidArgument
// when the message length is 0, TooManyMonomials above `cap` codewords.
NiceSet gen_nice_set(uint32_t n, uint32_t p, uint32_t t_tilde, double alpha,
                     uint64_t cap = kDefaultMonomialCap);
NiceSet gen_nice_set(const HardPolyParams& params, double alpha,
                     uint64_t cap = kDefaultMonomialCap);

// Smallest Hamming distance over all distinct pairs (0 with < 2 words).
uint32_t min_pairwise_distance(const std::vector<TupleIndex>& words);

struct DistanceVerdict {
  bool pass = false;
  bool degenerate = false;  // bound <= 0
  int64_t bound = 0;        // floor(alpha t~) (t - 3p)
  uint32_t min_distance = 0;
  uint64_t pairs_checked = 0;
  uint64_t violations = 0;
};

// Delta(m_f / m'_f, m_g / m'_g) >= bound over nice-set pairs: all pairs when
// there are at most `max_pairs`, otherwise `max_pairs` seeded random pairs.
DistanceVerdict verify_distance_lemma(const HardPolyParams& params, double alpha,
                                      uint64_t max_pairs = 5'000'000, uint64_t seed = 0);

struct BlockAgreement {
  bool pass = false;
  uint32_t min_difference = 0;  // over blocks and distinct f, g in S_p
  int64_t bound = 0;            // t - p
};

// For every block and distinct f, g in S_p, the block parts of m_f and m_g
// differ in at least t - p variables.
BlockAgreement verify_block_agreement(const HardPolyParams& params,
                                      uint64_t cap = kDefaultMonomialCap);

struct QInstance {
  uint32_t n = 0;
  uint32_t base = 0;
  uint32_t top = 0;
  // Gate i: y_i times the block factors of P_{1, base^i, n}; y_i at n^2 + i.
  Depth4Circuit circuit;
  // P_{1, base^i, n} as one-gate circuits over the same n^2 + top + 1 variables.
  std::vector<Depth4Circuit> summands;
};

// sum_{i=0..top} y_i P_{1, base^i, n}. Requires base >= 2 and base^top <= n.
QInstance gen_Q(uint32_t n, uint32_t base, uint32_t top, uint64_t cap = kDefaultMonomialCap);

// Assignment selecting summand i of Q (y_i = 1, other selectors 0).
Assignment q_selector(const QInstance& q, uint32_t i);

}  // namespace spdlab

#endif  // SPDLAB_HARDPOLY_H_
