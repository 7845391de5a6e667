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

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace spdlab::kernels {
namespace {

// x mod p for lanes x < 2^31 via Barrett: q = (x * floor(2^32/p)) >> 32 is
// floor(x/p) or one less, so a single conditional subtraction finishes.
__attribute__((target("avx2"))) inline __m256i reduce_lanes(__m256i x, __m256i vp,
                                                            __m256i vbarrett) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, vbarrett), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), vbarrett);
  const __m256i q = _mm256_blend_epi32(even, odd, 0b10101010);
  const __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
  // r in [0, 2p): r - p wraps above r when r < p.
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

inline uint32_t reduce_one(uint32_t x, const PrimeModulus& m) {
  const auto q = static_cast<uint32_t>((uint64_t{x} * m.barrett) >> 32);
  uint32_t r = x - q * m.p;
  return r >= m.p ? r - m.p : r;
}

}  // namespace

__attribute__((target("avx2"))) void axpy_mod_avx2(std::span<uint32_t> dst,
                                                   std::span<const uint32_t> src, uint32_t c,
                                                   const PrimeModulus& m) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(m.p));
  const __m256i vb = _mm256_set1_epi32(static_cast<int>(m.barrett));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  size_t i = 0;
  const size_t n = dst.size();
  for (; i + 8 <= n; i += 8) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    const __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), reduce_lanes(x, vp, vb));
  }
  for (; i < n; ++i) dst[i] = reduce_one(dst[i] + c * src[i], m);
}

__attribute__((target("avx2"))) void scale_mod_avx2(std::span<uint32_t> dst, uint32_t c,
                                                    const PrimeModulus& m) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(m.p));
  const __m256i vb = _mm256_set1_epi32(static_cast<int>(m.barrett));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  size_t i = 0;
  const size_t n = dst.size();
  for (; i + 8 <= n; i += 8) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i),
                        reduce_lanes(_mm256_mullo_epi32(d, vc), vp, vb));
  }
  for (; i < n; ++i) dst[i] = reduce_one(c * dst[i], m);
}

}  // namespace spdlab::kernels

#endif
