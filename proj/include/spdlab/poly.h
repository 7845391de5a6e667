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

#ifndef SPDLAB_POLY_H_
#define SPDLAB_POLY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spdlab/field.h"

namespace spdlab {

// A monomial as a sparse exponent vector: (variable, exponent) pairs sorted by
// variable, exponents strictly positive.
class Monomial {
 public:
  using Entry = std::pair<uint32_t, uint32_t>;

  Monomial() = default;
  // Entries may be unsorted, repeated or carry zero exponents; they are
  // normalized.
  explicit Monomial(std::vector<Entry> entries);

  static Monomial variable(uint32_t var, uint32_t exp = 1);
  // Product of the listed variables, with repetition.
  static Monomial from_variables(std::span<const uint32_t> vars);

  const std::vector<Entry>& entries() const { return entries_; }
  uint32_t degree() const { return degree_; }
  bool is_one() const { return entries_.empty(); }
  uint32_t exponent(uint32_t var) const;
  // Largest variable index + 1, or 0 for the unit monomial.
  uint32_t span_vars() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(*this, num).
  friend Monomial operator/(const Monomial& num, const Monomial& den);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Entry> entries_;
  uint32_t degree_ = 0;
};

// Graded lexicographic comparison: total degree first, then exponent vectors
// lexicographically with variable 0 most significant. Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

// Orders monomials from grlex-largest to grlex-smallest.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

// Monomial distance: min(|S1| - |S1 n S2|, |S2| - |S1 n S2|) on the variable
// multisets.
uint32_t distance(const Monomial& a, const Monomial& b);

class Polynomial {
 public:
  using Terms = std::map<Monomial, FieldElement, GrlexDescending>;

  Polynomial() = default;
  Polynomial(FieldSpec field, uint32_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  static Polynomial constant(const FieldSpec& field, uint32_t nvars, FieldElement c);
  static Polynomial monomial(const FieldSpec& field, uint32_t nvars, const Monomial& m,
                             FieldElement c);
  static Polynomial variable(const FieldSpec& field, uint32_t nvars, uint32_t var);

  const FieldSpec& field() const { return field_; }
  uint32_t nvars() const { return nvars_; }
  // Terms in canonical order (grlex descending).
  const Terms& terms() const { return terms_; }
  size_t sparsity() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  FieldElement coefficient(const Monomial& m) const;

  // Adds c * m; drops the term if it cancels. Throws ArityMismatch when m uses
  // a variable >= nvars.
  void add_term(const Monomial& m, FieldElement c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(FieldElement c) const;
  Polynomial times_monomial(const Monomial& m) const;

  // Same terms over a different variable count; throws ArityMismatch if some
  // term uses a variable >= nvars.
  Polynomial with_nvars(uint32_t nvars) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  FieldSpec field_;
  uint32_t nvars_ = 0;
  Terms terms_;
};

// Throws FieldMismatch unless a and b share field and variable count.
void require_compatible(const Polynomial& a, const Polynomial& b);

// Iterated formal derivative by every variable of m with multiplicity.
Polynomial derivative(const Polynomial& p, const Monomial& m);

enum class MonomialOrder { kGrlex };

// Maximal support monomial; throws ZeroPolynomial for p == 0.
Monomial leading_monomial(const Polynomial& p, MonomialOrder order = MonomialOrder::kGrlex);

struct PolyChecks {
  // nullopt for the zero polynomial.
  std::optional<uint32_t> degree;
  bool is_homogeneous = true;
  size_t sparsity = 0;
};
PolyChecks checks(const Polynomial& p);

// Degree of p, or -1 for the zero polynomial.
int64_t degree_or_minus_one(const Polynomial& p);

// Throws ArityMismatch if point.size() != nvars.
FieldElement eval(const Polynomial& p, std::span<const FieldElement> point);

// Evaluates p over `target`, a field containing p's prime field: each
// coefficient must lie in GF(p) (k == 1 source fields only) and is mapped to
// the matching constant of `target`.
FieldElement eval_in(const Polynomial& p, const FieldSpec& target,
                     std::span<const FieldElement> point);

// Substitutes constants for some variables; nvars is unchanged.
using Assignment = std::map<uint32_t, FieldElement>;
Polynomial substitute(const Polynomial& p, const Assignment& assignment);

}  // namespace spdlab

#endif  // SPDLAB_POLY_H_
