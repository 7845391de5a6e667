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

#include "spdlab/kernels/rowops.h"

namespace spdlab::kernels {

void axpy_mod_scalar(std::span<uint32_t> dst, std::span<const uint32_t> src, uint32_t c,
                     const PrimeModulus& m) {
  const uint64_t p = m.p;
  for (size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<uint32_t>((dst[i] + uint64_t{c} * src[i]) % p);
  }
}

void scale_mod_scalar(std::span<uint32_t> dst, uint32_t c, const PrimeModulus& m) {
  const uint64_t p = m.p;
  for (auto& v : dst) v = static_cast<uint32_t>(uint64_t{c} * v % p);
}

}  // namespace spdlab::kernels
