#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ricciforge {

// Worker count: RICCIFORGE_THREADS when set, hardware concurrency otherwise.
inline int worker_count() {
  if (const char* env = std::getenv("RICCIFORGE_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

// Deterministic parallel map: fn(i) writes to index-addressed storage; results
// never depend on the thread count or interleaving.
inline void parallel_for(long long n, const std::function<void(long long)>& fn) {
  const int workers = worker_count();
  if (workers <= 1 || n < 256) {
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (long long i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ricciforge
