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

#ifndef SPDLAB_KERNELS_ROWOPS_H_
#define SPDLAB_KERNELS_ROWOPS_H_

#include <cstdint>
#include <span>

namespace spdlab::kernels {

// Row operations of Gaussian elimination over a prime field GF(p), on rows of
// canonical residues in [0, p). The vector variants require p < kSimdMaxPrime
// so that c * x + y fits in 31 bits; the dispatcher falls back to the scalar
// kernels for larger primes.
inline constexpr uint32_t kSimdMaxPrime = 1u << 15;

// Barrett constant floor(2^32 / p) for p >= 2.
struct PrimeModulus {
  uint32_t p;
  uint32_t barrett;

  explicit PrimeModulus(uint32_t prime)
      : p(prime), barrett(static_cast<uint32_t>((uint64_t{1} << 32) / prime)) {}
};

enum class Isa { kScalar, kAvx2 };

// dst[i] = (dst[i] + c * src[i]) mod p. Sizes must match.
void axpy_mod_scalar(std::span<uint32_t> dst, std::span<const uint32_t> src, uint32_t c,
                     const PrimeModulus& m);
// dst[i] = c * dst[i] mod p.
void scale_mod_scalar(std::span<uint32_t> dst, uint32_t c, const PrimeModulus& m);

#if defined(__x86_64__) || defined(__i386__)
void axpy_mod_avx2(std::span<uint32_t> dst, std::span<const uint32_t> src, uint32_t c,
                   const PrimeModulus& m);
void scale_mod_avx2(std::span<uint32_t> dst, uint32_t c, const PrimeModulus& m);
#endif

// Whether the running CPU can execute the given variant.
bool isa_supported(Isa isa);

// Best supported variant, unless overridden by force_isa or by the
// SPDLAB_ISA environment variable ("scalar" or "avx2").
Isa active_isa();
// Pins the dispatcher (tests use this to compare variants). Throws
// InvalidArgument when the CPU lacks the requested variant.
void force_isa(Isa isa);
const char* isa_name(Isa isa);

// Dispatched entry points.
void axpy_mod(std::span<uint32_t> dst, std::span<const uint32_t> src, uint32_t c,
              const PrimeModulus& m);
void scale_mod(std::span<uint32_t> dst, uint32_t c, const PrimeModulus& m);

}  // namespace spdlab::kernels

#endif  // SPDLAB_KERNELS_ROWOPS_H_
