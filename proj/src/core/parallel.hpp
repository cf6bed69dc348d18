// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTITANGENT_CORE_PARALLEL_HPP
#define MULTITANGENT_CORE_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace multitangent {

/// Worker count: MULTITANGENT_THREADS if set, else hardware concurrency.
inline int WorkerCount() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MULTITANGENT_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return static_cast<int>(hw);
}

/// Runs body(begin, end, chunk) over contiguous chunks of [0, count).
/// Chunk boundaries depend only on count and the worker count, and callers
/// merge per-chunk results in chunk order.
inline void ParallelChunks(
    long count, const std::function<void(long, long, int)>& body,
    int workers = WorkerCount()) {
  workers = static_cast<int>(std::clamp<long>(workers, 1, std::max(1L, count)));
  if (workers == 1) {
    body(0, count, 0);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  const long per = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long begin = w * per;
    const long end = std::min(count, begin + per);
    threads.emplace_back([&, begin, end, w] {
      try {
        if (begin < end) body(begin, end, w);
      } catch (...) {
        errors[static_cast<size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace multitangent

#endif  // MULTITANGENT_CORE_PARALLEL_HPP
