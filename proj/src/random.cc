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

#include "spdlab/random.h"

#include <algorithm>
#include <vector>

namespace spdlab {

Monomial random_monomial(uint32_t nvars, uint32_t degree, SplitMix64& rng) {
  std::vector<uint32_t> vars(degree);
  for (auto& v : vars) v = static_cast<uint32_t>(rng.below(nvars));
  return Monomial::from_variables(vars);
}

namespace {

FieldElement nonzero_element(const FieldSpec& f, SplitMix64& rng) {
  return {static_cast<uint32_t>(1 + rng.below(f.q() - 1))};
}

}  // namespace

Polynomial random_polynomial(const FieldSpec& f, uint32_t nvars, uint32_t max_degree,
                             uint32_t terms, SplitMix64& rng) {
  Polynomial p(f, nvars);
  for (uint32_t i = 0; i < terms; ++i) {
    const auto deg = static_cast<uint32_t>(rng.below(uint64_t{max_degree} + 1));
    p.add_term(random_monomial(nvars, deg, rng), nonzero_element(f, rng));
  }
  return p;
}

Polynomial random_homogeneous(const FieldSpec& f, uint32_t nvars, uint32_t degree, uint32_t terms,
                              SplitMix64& rng) {
  terms = std::max<uint32_t>(terms, 1);
  while (true) {
    Polynomial p(f, nvars);
    for (uint32_t i = 0; i < terms; ++i) {
      p.add_term(random_monomial(nvars, degree, rng), nonzero_element(f, rng));
    }
    if (!p.is_zero()) return p;
  }
}

ProductGate random_product(const FieldSpec& f, uint32_t nvars, std::span<const uint32_t> degrees,
                           uint32_t terms, SplitMix64& rng) {
  ProductGate g;
  for (uint32_t d : degrees) {
    const auto count = static_cast<uint32_t>(1 + rng.below(terms));
    g.factors.push_back(random_homogeneous(f, nvars, d, count, rng));
  }
  return g;
}

Depth4Circuit random_homogeneous_circuit(const FieldSpec& f, uint32_t nvars, uint32_t gates,
                                         uint32_t degree, uint32_t max_factor_degree,
                                         uint32_t terms, SplitMix64& rng) {
  Depth4Circuit c(f, nvars);
  max_factor_degree = std::max<uint32_t>(max_factor_degree, 1);
  for (uint32_t g = 0; g < gates; ++g) {
    std::vector<uint32_t> parts;
    uint32_t left = degree;
    while (left > 0) {
      const auto part = static_cast<uint32_t>(1 + rng.below(std::min(left, max_factor_degree)));
      parts.push_back(part);
      left -= part;
    }
    if (parts.empty()) parts.push_back(0);
    c.add_gate(random_product(f, nvars, parts, terms, rng));
  }
  return c;
}

}  // namespace spdlab
