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

#ifndef SPDLAB_CIRCUIT_H_
#define SPDLAB_CIRCUIT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "spdlab/field.h"
#include "spdlab/poly.h"

namespace spdlab {

inline constexpr uint64_t kDefaultTermCap = 1'000'000;

struct ProductGate {
  std::vector<Polynomial> factors;
};

// Sum of product gates, each a product of sparse polynomials:
//   P = sum_i prod_j Q_ij.
// The empty gate list denotes 0; gates with no factors are rejected.
class Depth4Circuit {
 public:
  Depth4Circuit() = default;
  Depth4Circuit(FieldSpec field, uint32_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  // Throws FieldMismatch for foreign factors, InvalidArgument for an empty
  // gate and ZeroPolynomial for a zero factor.
  void add_gate(ProductGate gate);

  const FieldSpec& field() const { return field_; }
  uint32_t nvars() const { return nvars_; }
  const std::vector<ProductGate>& gates() const { return gates_; }
  size_t top_fanin() const { return gates_.size(); }

 private:
  FieldSpec field_;
  uint32_t nvars_ = 0;
  std::vector<ProductGate> gates_;
};

// Factor degree -> multiplicity.
using DegreeSequence = std::map<uint32_t, uint32_t>;

DegreeSequence degree_sequence(const ProductGate& gate);

struct CircuitStats {
  size_t r = 0;         // top fan-in
  uint32_t a = 0;       // bottom fan-in: max factor degree
  uint64_t s = 0;       // total factor term count + gate count
  // Common output degree when homogeneous, otherwise the maximal gate degree.
  uint32_t degree = 0;
  bool homogeneous = true;
  std::vector<uint32_t> gate_degrees;
  std::vector<DegreeSequence> degree_sequences;
};

CircuitStats stats(const Depth4Circuit& c);

// All gates share one degree-sequence multiset.
bool is_star(const Depth4Circuit& c);

// Product of the factors of one gate. Throws ExpansionTooLarge when the
// product of factor sparsities exceeds term_cap.
Polynomial expand_gate(const Depth4Circuit& c, const ProductGate& gate,
                       uint64_t term_cap = kDefaultTermCap);

// The polynomial the circuit computes.
Polynomial expand(const Depth4Circuit& c, uint64_t term_cap = kDefaultTermCap);

// Upper estimate of the expansion's term count (saturating).
uint64_t projected_terms(const Depth4Circuit& c);

// Substitutes the assignment in every factor. A factor that becomes zero
// removes its gate; nonzero constant factors are folded into one constant
// factor per gate (omitted when it equals 1 and other factors remain).
Depth4Circuit project(const Depth4Circuit& c, const Assignment& assignment);

// Evaluation without expansion.
FieldElement eval(const Depth4Circuit& c, std::span<const FieldElement> point);
// Evaluation over an extension of the circuit's prime field.
FieldElement eval_in(const Depth4Circuit& c, const FieldSpec& target,
                     std::span<const FieldElement> point);

// Single gate holding the polynomial as its only factor (zero -> empty circuit).
Depth4Circuit circuit_of(const Polynomial& p);

}  // namespace spdlab

#endif  // SPDLAB_CIRCUIT_H_
