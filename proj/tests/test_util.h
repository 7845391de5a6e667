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

#ifndef SPDLAB_TESTS_TEST_UTIL_H_
#define SPDLAB_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "spdlab/circuit.h"
#include "spdlab/field.h"
#include "spdlab/poly.h"

namespace spdlab::testing {

using Term = std::pair<int64_t, std::vector<Monomial::Entry>>;

inline Monomial mono(std::vector<Monomial::Entry> entries) { return Monomial(std::move(entries)); }

// Polynomial from (integer coefficient, {(var, exp), ...}) terms.
inline Polynomial make_poly(const FieldSpec& f, uint32_t nvars, std::initializer_list<Term> terms) {
  Polynomial p(f, nvars);
  for (const auto& [c, entries] : terms) p.add_term(Monomial(entries), f.from_int(c));
  return p;
}

inline Depth4Circuit make_circuit(const FieldSpec& f, uint32_t nvars,
                                  std::vector<std::vector<Polynomial>> gates) {
  Depth4Circuit c(f, nvars);
  for (auto& g : gates) c.add_gate(ProductGate{std::move(g)});
  return c;
}

}  // namespace spdlab::testing

#endif  // SPDLAB_TESTS_TEST_UTIL_H_
