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

#include "spdlab/field.h"

#include <algorithm>
#include <utility>

#include "spdlab/error.h"

namespace spdlab {
namespace {

// Dense polynomials over GF(p), coefficients low-to-high, no trailing zeros
// (the zero polynomial is the empty vector).
using Upoly = std::vector<uint32_t>;

void trim(Upoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

uint32_t mod_pow(uint64_t b, uint64_t e, uint32_t p) {
  uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

uint32_t mod_inv(uint32_t a, uint32_t p) { return mod_pow(a, p - 2, p); }

Upoly upoly_mul(const Upoly& a, const Upoly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Upoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t{a[i]} * b[j]) % p);
    }
  }
  trim(r);
  return r;
}

// Remainder of a modulo a nonzero divisor.
Upoly upoly_rem(Upoly a, const Upoly& m, uint32_t p) {
  trim(a);
  const uint32_t lead_inv = mod_inv(m.back(), p);
  while (a.size() >= m.size()) {
    const uint64_t c = uint64_t{a.back()} * lead_inv % p;
    const size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = static_cast<uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Upoly upoly_sub(Upoly a, const Upoly& b, uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Upoly upoly_gcd(Upoly a, Upoly b, uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Upoly r = upoly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^i) mod m, by repeated p-th powering.
Upoly frobenius_power(const Upoly& m, uint32_t p, uint32_t i) {
  Upoly x = upoly_rem({0, 1}, m, p);
  for (uint32_t step = 0; step < i; ++step) {
    Upoly base = x;
    Upoly acc = {1};
    uint32_t e = p;
    while (e) {
      if (e & 1) acc = upoly_rem(upoly_mul(acc, base, p), m, p);
      base = upoly_rem(upoly_mul(base, base, p), m, p);
      e >>= 1;
    }
    x = std::move(acc);
  }
  return x;
}

uint64_t checked_power(uint64_t base, uint32_t e, uint64_t cap) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

bool is_prime(uint64_t v) {
  if (v < 2) return false;
  for (uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

PrimePower factor_prime_power(uint64_t v) {
  if (v < 2) return {};
  uint64_t p = 0;
  for (uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {static_cast<uint32_t>(v), 1};
  uint32_t e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1) return {};
  return {static_cast<uint32_t>(p), e};
}

uint32_t next_prime_above(uint32_t v) {
  uint32_t c = v + 1;
  while (!is_prime(c)) ++c;
  return c;
}

bool is_irreducible_mod_p(const std::vector<uint32_t>& monic, uint32_t p) {
  Upoly m = monic;
  trim(m);
  if (m.size() < 2) return false;
  const uint32_t k = static_cast<uint32_t>(m.size() - 1);
  if (k == 1) return true;
  // Rabin-style test: gcd(m, x^(p^i) - x) = 1 for every i <= k/2.
  for (uint32_t i = 1; i <= k / 2; ++i) {
    Upoly g = upoly_sub(frobenius_power(m, p, i), {0, 1}, p);
    Upoly d = upoly_gcd(m, g, p);
    if (d.size() != 1) return false;
  }
  return true;
}

FieldSpec construct_field(uint32_t p, uint32_t k, uint64_t cap) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  const uint64_t q = checked_power(p, k, cap);
  if (q > cap) {
    throw Error(ErrorCode::kSearchOverflow,
                std::to_string(p) + "^" + std::to_string(k) + " exceeds the field cap");
  }
  FieldSpec f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = q;
  if (k == 1) {
    f.modulus_ = {0, 1};
    return f;
  }
  for (uint64_t code = 0; code < q; ++code) {
    std::vector<uint32_t> m(k + 1, 0);
    uint64_t c = code;
    for (uint32_t i = 0; i < k; ++i) {
      m[i] = static_cast<uint32_t>(c % p);
      c /= p;
    }
    m[k] = 1;
    if (m[0] == 0) continue;  // divisible by x
    if (is_irreducible_mod_p(m, p)) {
      f.modulus_ = std::move(m);
      return f;
    }
  }
  // Irreducible polynomials exist in every degree.
  throw Error(ErrorCode::kSearchOverflow, "no irreducible modulus found");
}

FieldSpec field_of_order(uint64_t q, uint64_t cap) {
  const PrimePower pp = factor_prime_power(q);
  if (pp.p == 0) throw Error(ErrorCode::kNotPrimePower, std::to_string(q) + " is not a prime power");
  return construct_field(pp.p, pp.e, cap);
}

std::vector<FieldElement> enumerate_elements(const FieldSpec& f, uint64_t cap) {
  if (f.q() > cap) throw Error(ErrorCode::kSearchOverflow, "field too large to enumerate");
  std::vector<FieldElement> out(f.q());
  for (uint64_t i = 0; i < f.q(); ++i) out[i] = {static_cast<uint32_t>(i)};
  return out;
}

FieldElement FieldSpec::from_int(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<uint32_t>(r)};
}

FieldElement FieldSpec::from_coeffs(const std::vector<uint32_t>& coeffs) const {
  uint64_t v = 0;
  for (size_t i = coeffs.size(); i-- > 0;) v = v * p_ + coeffs[i] % p_;
  return {static_cast<uint32_t>(v)};
}

std::vector<uint32_t> FieldSpec::coeffs(FieldElement a) const {
  std::vector<uint32_t> c(k_, 0);
  uint32_t v = a.value;
  for (uint32_t i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
  if (k_ == 1) return {static_cast<uint32_t>((uint64_t{a.value} + b.value) % p_)};
  uint32_t x = a.value, y = b.value, out = 0, scale = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement FieldSpec::neg(FieldElement a) const {
  if (k_ == 1) return {a.value == 0 ? 0 : p_ - a.value};
  uint32_t x = a.value, out = 0, scale = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
  if (k_ == 1) return {static_cast<uint32_t>(uint64_t{a.value} * b.value % p_)};
  Upoly x = coeffs(a), y = coeffs(b);
  trim(x);
  trim(y);
  Upoly r = upoly_rem(upoly_mul(x, y, p_), modulus_, p_);
  return from_coeffs(r);
}

FieldElement FieldSpec::inv(FieldElement a) const {
  if (a.value == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero in " + name());
  if (k_ == 1) return {mod_inv(a.value, p_)};
  // Extended Euclid on (modulus, a): track s with s * a == r (mod modulus).
  Upoly r0 = modulus_, r1 = coeffs(a);
  trim(r1);
  Upoly s0 = {}, s1 = {1};
  while (r1.size() > 1) {
    // Long division r0 = quot * r1 + rem.
    Upoly rem = r0;
    Upoly quot(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    const uint32_t lead_inv = mod_inv(r1.back(), p_);
    while (rem.size() >= r1.size()) {
      const uint32_t c = static_cast<uint32_t>(uint64_t{rem.back()} * lead_inv % p_);
      const size_t shift = rem.size() - r1.size();
      quot[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i) {
        rem[shift + i] = static_cast<uint32_t>((rem[shift + i] + uint64_t{p_ - c} * r1[i]) % p_);
      }
      trim(rem);
    }
    trim(quot);
    Upoly s2 = upoly_sub(s0, upoly_mul(quot, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because the modulus is irreducible.
  const uint32_t c = mod_inv(r1[0], p_);
  for (auto& v : s1) v = static_cast<uint32_t>(uint64_t{v} * c % p_);
  return from_coeffs(upoly_rem(s1, modulus_, p_));
}

FieldElement FieldSpec::div(FieldElement a, FieldElement b) const {
  if (b.value == 0) throw Error(ErrorCode::kDivisionByZero, "division by zero in " + name());
  return mul(a, inv(b));
}

FieldElement FieldSpec::pow(FieldElement a, uint64_t e) const {
  FieldElement r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string FieldSpec::name() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

}  // namespace spdlab
