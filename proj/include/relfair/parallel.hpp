// Copyright 2026 The Relfair Authors.
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

#ifndef RELFAIR_PARALLEL_HPP
#define RELFAIR_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace relfair {

/// Parallelism cap: RELFAIR_THREADS when set, else hardware concurrency.
inline int thread_budget() {
  if (const char* env = std::getenv("RELFAIR_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Evaluates fn(i) for i in [0, count) and returns results in index order.
/// Work items must be pure; results are merged by index, so the output is
/// independent of the thread count.
template <typename R>
std::vector<R> parallel_map(size_t count, const std::function<R(size_t)>& fn) {
  std::vector<R> out(count);
  const int threads = std::min<int>(thread_budget(), static_cast<int>(count));
  if (threads <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<size_t> cursor{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        const size_t i = cursor.fetch_add(1);
        if (i >= count) return;
        out[i] = fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace relfair

#endif  // RELFAIR_PARALLEL_HPP
