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

#ifndef SPDLAB_REDUCE_H_
#define SPDLAB_REDUCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spdlab/circuit.h"
#include "spdlab/field.h"

namespace spdlab {

// Multiplies out factors of each gate until every gate has at most b factors,
// each of degree at most a. The two lowest-degree factors are merged first.
// Top fan-in and the computed polynomial are unchanged.
//
// Throws InfeasibleTarget when b < ceil(d / a), when a factor already exceeds
// degree a, or when no two remaining factors fit together under a.
Depth4Circuit group_to_bilayer(const Depth4Circuit& c, uint32_t a, uint32_t b,
                               uint64_t term_cap = kDefaultTermCap);

// Expands the product H of the factors of degree >= t into monomials h_1..h_u
// and returns u gates, gate k holding the variables of h_k as degree-1 factors
// (coefficient folded into the first) followed by the low-degree factors.
std::vector<ProductGate> split_high_low(const Depth4Circuit& c, const ProductGate& gate,
                                        uint32_t t, uint64_t term_cap = kDefaultTermCap);

// split_high_low applied to every gate, gate order preserved.
Depth4Circuit split_circuit(const Depth4Circuit& c, uint32_t t,
                            uint64_t term_cap = kDefaultTermCap);

// Factors in non-increasing degree order; ties broken by serialized form.
ProductGate sorted_factors(const ProductGate& gate);

// floor(n^(i/m)), computed exactly.
uint64_t scale_value(uint64_t n, uint32_t i, uint32_t m);

// Degree profile of one product gate over m geometric scales. S_i holds the
// first floor(n^(i/m)) factors in sorted order, S_0 is empty, and D_i is the
// degree sum of S_i \ S_(i-1). Scale i is bad when D_i >= eps * n.
struct ThresholdProfile {
  uint32_t m = 0;
  double eps = 0;
  uint64_t n = 0;
  std::vector<uint32_t> degrees;   // sorted non-increasing (padded if asked)
  std::vector<uint64_t> scales;    // k_1..k_m
  std::vector<uint64_t> dsums;     // D_1..D_m
  std::vector<uint32_t> bad;       // 1-based scale indices

  bool is_bad(uint32_t i) const;
};

ThresholdProfile profile_degrees(std::vector<uint32_t> degrees, uint32_t m, double eps,
                                 bool pad_to_n);
ThresholdProfile profile(const ProductGate& gate, uint32_t m, double eps, bool pad_to_n);

struct CommonK {
  uint32_t i = 0;
  uint64_t k = 0;
  uint32_t m = 0;
  std::vector<ThresholdProfile> profiles;
  size_t bad_union_size = 0;
};

// Smallest scale index good for every profile with k_i in [k_lo, k_hi].
// Throws NoGoodIndex. All profiles must share m.
CommonK choose_common_index(std::vector<ThresholdProfile> profiles, uint64_t k_lo,
                            uint64_t k_hi);

// Profiles every gate with m = ceil(2r / eps) scales and picks a common index.
// The circuit must be homogeneous.
CommonK choose_common_k(const Depth4Circuit& c, double eps, uint64_t k_lo, uint64_t k_hi,
                        bool pad_to_n = false);

// Sum of the `count` largest factor degrees of a gate.
uint64_t max_degree_sum(const ProductGate& gate, size_t count);

// For every gate of degree n: the floor(eps n / t) largest factor degrees sum
// to at most eps n.
bool avg_bottom_fanin_check(const Depth4Circuit& c, double eps, double t);

// The decomposition behind the good-index bound: for scale index i of an
// m-scale profile, H = S_(i-1) is multiplied out, each monomial of H becomes a
// gate of degree-1 factors times the remaining factors, and factors of degree
// <= eps n / k are grouped into products of degree in [eps n / k, 2 eps n / k]
// (the final group may be lighter).
struct SpsDecomposition {
  Depth4Circuit circuit;
  uint64_t k = 0;
  uint64_t n = 0;
  double group_threshold = 0;
};
SpsDecomposition sps_decompose(const Depth4Circuit& c, const ProductGate& gate, double eps,
                               uint32_t m, uint32_t i, uint64_t term_cap = kDefaultTermCap);

struct EquivalenceOptions {
  uint64_t term_cap = kDefaultTermCap;
  bool allow_extension = true;
  // Skip exact expansion and go straight to random evaluation.
  bool force_random = false;
};

struct EquivalenceVerdict {
  enum class Kind { kEqual, kUnequalWitness, kProbablyEqual };
  Kind kind = Kind::kEqual;
  bool exact = false;
  // Witness (possibly empty if an exact difference was found but no sampled
  // point exposed it) and the field it lives in.
  std::vector<FieldElement> point;
  FieldSpec sample_field;
  uint32_t trials_run = 0;
  // (d / q)^trials for ProbablyEqual.
  double failure_bound = 0;

  bool equal() const { return kind != Kind::kUnequalWitness; }
};

const char* verdict_name(EquivalenceVerdict::Kind kind);

// Exact comparison when both expansions fit the cap, otherwise random
// evaluation at `trials` uniform points (Schwartz-Zippel). When q <= degree the
// points are drawn from GF(p^e) with p^e > degree; throws FieldTooSmall if that
// is disabled or impossible.
EquivalenceVerdict equivalent(const Depth4Circuit& a, const Depth4Circuit& b, uint32_t trials,
                              uint64_t seed, const EquivalenceOptions& options = {});

struct ReductionReport {
  CircuitStats input;
  CircuitStats output;
  double threshold = 0;
  double blowup = 0;  // output r / input r
  EquivalenceVerdict verdict;
};

ReductionReport make_report(const Depth4Circuit& in, const Depth4Circuit& out, double threshold,
                            const EquivalenceVerdict& verdict);

}  // namespace spdlab

#endif  // SPDLAB_REDUCE_H_
