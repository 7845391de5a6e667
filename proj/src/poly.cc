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

#include <algorithm>
#include <string>

#include "spdlab/error.h"

namespace spdlab {

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [var, exp] : entries) {
    if (exp == 0) continue;
    if (!entries_.empty() && entries_.back().first == var) {
      entries_.back().second += exp;
    } else {
      entries_.emplace_back(var, exp);
    }
    degree_ += exp;
  }
}

Monomial Monomial::variable(uint32_t var, uint32_t exp) { return Monomial({{var, exp}}); }

Monomial Monomial::from_variables(std::span<const uint32_t> vars) {
  std::vector<Entry> e;
  e.reserve(vars.size());
  for (uint32_t v : vars) e.emplace_back(v, 1);
  return Monomial(std::move(e));
}

uint32_t Monomial::exponent(uint32_t var) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{var, 0});
  return (it != entries_.end() && it->first == var) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  size_t j = 0;
  for (const auto& [var, exp] : entries_) {
    while (j < other.entries_.size() && other.entries_[j].first < var) ++j;
    if (j == other.entries_.size() || other.entries_[j].first != var ||
        other.entries_[j].second < exp) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.entries_.reserve(entries_.size() + other.entries_.size());
  size_t i = 0, j = 0;
  while (i < entries_.size() || j < other.entries_.size()) {
    if (j == other.entries_.size() ||
        (i < entries_.size() && entries_[i].first < other.entries_[j].first)) {
      r.entries_.push_back(entries_[i++]);
    } else if (i == entries_.size() || other.entries_[j].first < entries_[i].first) {
      r.entries_.push_back(other.entries_[j++]);
    } else {
      r.entries_.emplace_back(entries_[i].first, entries_[i].second + other.entries_[j].second);
      ++i;
      ++j;
    }
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial operator/(const Monomial& num, const Monomial& den) {
  Monomial r;
  size_t j = 0;
  for (const auto& [var, exp] : num.entries_) {
    while (j < den.entries_.size() && den.entries_[j].first < var) ++j;
    uint32_t e = exp;
    if (j < den.entries_.size() && den.entries_[j].first == var) e -= den.entries_[j].second;
    if (e > 0) r.entries_.emplace_back(var, e);
  }
  r.degree_ = num.degree_ - den.degree_;
  return r;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& x = a.entries();
  const auto& y = b.entries();
  size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first) return 1;  // a has a positive exponent where b has 0
    if (y[j].first < x[i].first) return -1;
    if (x[i].second != y[j].second) return x[i].second < y[j].second ? -1 : 1;
    ++i;
    ++j;
  }
  if (i < x.size()) return 1;
  if (j < y.size()) return -1;
  return 0;
}

uint32_t distance(const Monomial& a, const Monomial& b) {
  uint32_t common = 0;
  const auto& x = a.entries();
  const auto& y = b.entries();
  size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first) {
      ++i;
    } else if (y[j].first < x[i].first) {
      ++j;
    } else {
      common += std::min(x[i].second, y[j].second);
      ++i;
      ++j;
    }
  }
  return std::min(a.degree() - common, b.degree() - common);
}

Polynomial Polynomial::constant(const FieldSpec& field, uint32_t nvars, FieldElement c) {
  return monomial(field, nvars, Monomial(), c);
}

Polynomial Polynomial::monomial(const FieldSpec& field, uint32_t nvars, const Monomial& m,
                                FieldElement c) {
  Polynomial p(field, nvars);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(const FieldSpec& field, uint32_t nvars, uint32_t var) {
  return monomial(field, nvars, Monomial::variable(var), field.one());
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::add_term(const Monomial& m, FieldElement c) {
  if (c.value == 0) return;
  if (m.span_vars() > nvars_) {
    throw Error(ErrorCode::kArityMismatch, "variable index " + std::to_string(m.span_vars() - 1) +
                                               " out of range for nvars=" +
                                               std::to_string(nvars_));
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (it->second.value == 0) terms_.erase(it);
}

void require_compatible(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field()) || a.nvars() != b.nvars()) {
    throw Error(ErrorCode::kFieldMismatch, "operands over " + a.field().name() + "[" +
                                               std::to_string(a.nvars()) + " vars] and " +
                                               b.field().name() + "[" +
                                               std::to_string(b.nvars()) + " vars]");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_compatible(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_compatible(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, field_.neg(c));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  Polynomial r(a.field(), a.nvars());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, a.field().mul(ca, cb));
  }
  return r;
}

Polynomial Polynomial::scaled(FieldElement c) const {
  Polynomial r(field_, nvars_);
  if (c.value == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_.mul(v, c));
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial r(field_, nvars_);
  for (const auto& [t, v] : terms_) r.add_term(t * m, v);
  return r;
}

Polynomial Polynomial::with_nvars(uint32_t nvars) const {
  Polynomial r(field_, nvars);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

Polynomial derivative(const Polynomial& p, const Monomial& m) {
  const FieldSpec& f = p.field();
  Polynomial r(f, p.nvars());
  for (const auto& [t, c] : p.terms()) {
    if (!m.divides(t)) continue;
    // Falling factorial e (e-1) ... (e-j+1) for each variable x^e, j = deg_x m.
    FieldElement coef = c;
    for (const auto& [var, j] : m.entries()) {
      const uint32_t e = t.exponent(var);
      for (uint32_t s = 0; s < j && coef.value != 0; ++s) {
        coef = f.mul(coef, f.from_int(static_cast<int64_t>(e) - s));
      }
    }
    r.add_term(t / m, coef);
  }
  return r;
}

Monomial leading_monomial(const Polynomial& p, MonomialOrder) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "leading monomial of zero");
  return p.terms().begin()->first;
}

PolyChecks checks(const Polynomial& p) {
  PolyChecks c;
  c.sparsity = p.sparsity();
  for (const auto& [m, v] : p.terms()) {
    if (!c.degree) {
      c.degree = m.degree();
    } else if (*c.degree != m.degree()) {
      c.is_homogeneous = false;
      c.degree = std::max(*c.degree, m.degree());
    }
  }
  return c;
}

int64_t degree_or_minus_one(const Polynomial& p) {
  return p.is_zero() ? -1 : static_cast<int64_t>(p.terms().begin()->first.degree());
}

namespace {

FieldElement eval_with(const Polynomial& p, const FieldSpec& f,
                       std::span<const FieldElement> point, bool lift) {
  if (point.size() != p.nvars()) {
    throw Error(ErrorCode::kArityMismatch, "point has " + std::to_string(point.size()) +
                                               " coordinates, polynomial has " +
                                               std::to_string(p.nvars()) + " variables");
  }
  FieldElement acc = f.zero();
  for (const auto& [m, c] : p.terms()) {
    FieldElement t = lift ? f.from_int(c.value) : c;
    for (const auto& [var, exp] : m.entries()) t = f.mul(t, f.pow(point[var], exp));
    acc = f.add(acc, t);
  }
  return acc;
}

}  // namespace

FieldElement eval(const Polynomial& p, std::span<const FieldElement> point) {
  return eval_with(p, p.field(), point, false);
}

FieldElement eval_in(const Polynomial& p, const FieldSpec& target,
                     std::span<const FieldElement> point) {
  if (!p.field().is_prime_field() || p.field().p() != target.p()) {
    throw Error(ErrorCode::kFieldMismatch,
                "cannot embed " + p.field().name() + " into " + target.name());
  }
  return eval_with(p, target, point, true);
}

Polynomial substitute(const Polynomial& p, const Assignment& assignment) {
  const FieldSpec& f = p.field();
  Polynomial r(f, p.nvars());
  for (const auto& [m, c] : p.terms()) {
    FieldElement coef = c;
    std::vector<Monomial::Entry> rest;
    for (const auto& [var, exp] : m.entries()) {
      auto it = assignment.find(var);
      if (it == assignment.end()) {
        rest.emplace_back(var, exp);
      } else {
        coef = f.mul(coef, f.pow(it->second, exp));
      }
    }
    r.add_term(Monomial(std::move(rest)), coef);
  }
  return r;
}

}  // namespace spdlab
