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

#ifndef SPDLAB_FIELD_H_
#define SPDLAB_FIELD_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace spdlab {

// An element of GF(p^k) in the polynomial basis {1, x, ..., x^(k-1)}.
//
// The residues are packed as base-p digits, low degree first:
// value = c_0 + c_1 p + ... + c_{k-1} p^(k-1). The packed integer order is
// therefore the canonical enumeration order of the field (low digit fastest).
struct FieldElement {
  uint32_t value = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

inline constexpr uint64_t kDefaultFieldCap = uint64_t{1} << 20;

class FieldSpec {
 public:
  FieldSpec() = default;

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint64_t q() const { return q_; }
  bool is_prime_field() const { return k_ == 1; }

  // Monic modulus, coefficients low-to-high, length k + 1. For k == 1 this is
  // the polynomial x (the "x - 0" convention).
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  // Image of an integer under Z -> GF(p) -> GF(p^k).
  FieldElement from_int(int64_t v) const;
  FieldElement from_coeffs(const std::vector<uint32_t>& coeffs) const;
  std::vector<uint32_t> coeffs(FieldElement a) const;
  bool is_valid(FieldElement a) const { return a.value < q_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, uint64_t e) const;

  // "GF(p)" or "GF(p^k)".
  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

 private:
  friend FieldSpec construct_field(uint32_t p, uint32_t k, uint64_t cap);

  uint32_t p_ = 2;
  uint32_t k_ = 1;
  uint64_t q_ = 2;
  std::vector<uint32_t> modulus_ = {0, 1};
};

bool is_prime(uint64_t v);

// Returns {p, e} with v == p^e, or {0, 0} when v is not a prime power.
struct PrimePower {
  uint32_t p = 0;
  uint32_t e = 0;
};
PrimePower factor_prime_power(uint64_t v);

// Smallest prime strictly greater than v.
uint32_t next_prime_above(uint32_t v);

// GF(p^k) with the smallest monic irreducible modulus of degree k, where
// candidate moduli are ordered by their packed coefficient value
// (c_0 + c_1 p + ... + c_{k-1} p^(k-1)). Deterministic.
//
// Throws NotPrime for composite p and SearchOverflow when p^k > cap.
FieldSpec construct_field(uint32_t p, uint32_t k, uint64_t cap = kDefaultFieldCap);

// Field of order q for a prime power q.
FieldSpec field_of_order(uint64_t q, uint64_t cap = kDefaultFieldCap);

// All q elements in canonical order; position i (0-based) is identified with
// the integer i + 1 of [q].
std::vector<FieldElement> enumerate_elements(const FieldSpec& f,
                                             uint64_t cap = kDefaultFieldCap);

// Irreducibility of a monic polynomial over GF(p), coefficients low-to-high.
bool is_irreducible_mod_p(const std::vector<uint32_t>& monic, uint32_t p);

}  // namespace spdlab

#endif  // SPDLAB_FIELD_H_
