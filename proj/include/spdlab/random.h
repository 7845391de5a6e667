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

#ifndef SPDLAB_RANDOM_H_
#define SPDLAB_RANDOM_H_

#include <cstdint>
#include <span>

#include "spdlab/circuit.h"
#include "spdlab/poly.h"
#include "spdlab/rng.h"

namespace spdlab {

// Seeded random instances for property checks. Every draw comes from the
// caller's stream, so a (seed, stream) pair fixes the instance.

// Product of `degree` uniformly chosen variables.
Monomial random_monomial(uint32_t nvars, uint32_t degree, SplitMix64& rng);

// Up to `terms` random terms of degree <= max_degree with nonzero
// coefficients (coinciding monomials are summed and may cancel).
Polynomial random_polynomial(const FieldSpec& f, uint32_t nvars, uint32_t max_degree,
                             uint32_t terms, SplitMix64& rng);

// Nonzero and homogeneous of the given degree.
Polynomial random_homogeneous(const FieldSpec& f, uint32_t nvars, uint32_t degree, uint32_t terms,
                              SplitMix64& rng);

// One factor per entry of `degrees`, each homogeneous and nonzero.
ProductGate random_product(const FieldSpec& f, uint32_t nvars, std::span<const uint32_t> degrees,
                           uint32_t terms, SplitMix64& rng);

// `gates` gates of total degree `degree`; each gate's factor degrees are a
// random composition of `degree` into parts <= max_factor_degree.
Depth4Circuit random_homogeneous_circuit(const FieldSpec& f, uint32_t nvars, uint32_t gates,
                                         uint32_t degree, uint32_t max_factor_degree,
                                         uint32_t terms, SplitMix64& rng);

}  // namespace spdlab

#endif  // SPDLAB_RANDOM_H_
