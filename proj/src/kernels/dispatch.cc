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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "spdlab/error.h"
#include "spdlab/kernels/rowops.h"

namespace spdlab::kernels {
namespace {

Isa detect() {
  if (const char* env = std::getenv("SPDLAB_ISA")) {
    const std::string_view v(env);
    if (v == "scalar") return Isa::kScalar;
    if (v == "avx2" && isa_supported(Isa::kAvx2)) return Isa::kAvx2;
  }
  return isa_supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<int>& forced() {
  static std::atomic<int> v{-1};
  return v;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  const int f = forced().load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Isa>(f);
  static const Isa detected = detect();
  return detected;
}

void force_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw Error(ErrorCode::kInvalidArgument, std::string("ISA not supported: ") + isa_name(isa));
  }
  forced().store(static_cast<int>(isa), std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

void axpy_mod(std::span<uint32_t> dst, std::span<const uint32_t> src, uint32_t c,
              const PrimeModulus& m) {
#if defined(__x86_64__) || defined(__i386__)
  if (m.p < kSimdMaxPrime && active_isa() == Isa::kAvx2) return axpy_mod_avx2(dst, src, c, m);
#endif
  axpy_mod_scalar(dst, src, c, m);
}

void scale_mod(std::span<uint32_t> dst, uint32_t c, const PrimeModulus& m) {
#if defined(__x86_64__) || defined(__i386__)
  if (m.p < kSimdMaxPrime && active_isa() == Isa::kAvx2) return scale_mod_avx2(dst, c, m);
#endif
  scale_mod_scalar(dst, c, m);
}

}  // namespace spdlab::kernels
