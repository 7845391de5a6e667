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

#ifndef SPDLAB_PARALLEL_H_
#define SPDLAB_PARALLEL_H_

#include <cstddef>
#include <functional>
#include <vector>

namespace spdlab {

// Worker count: SPDLAB_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
size_t worker_count();

// Runs fn(i) for i in [0, count) on up to worker_count() threads. Work is
// split into contiguous index ranges; callers store results by index so the
// merge order never depends on scheduling. The first exception thrown by any
// task is rethrown after all workers finish.
void parallel_for(size_t count, const std::function<void(size_t)>& fn);

template <typename T, typename Fn>
std::vector<T> parallel_map(size_t count, Fn&& fn) {
  std::vector<T> out(count);
  parallel_for(count, [&](size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace spdlab

#endif  // SPDLAB_PARALLEL_H_
