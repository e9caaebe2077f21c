#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace taustar {

// Thread count used by study drivers; TAUSTAR_THREADS overrides the
// hardware default.
inline unsigned thread_count() {
  if (const char* env = std::getenv("TAUSTAR_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, count).  Tasks must be independent; anything
// random inside must derive its stream from the task index so the result
// does not depend on the thread layout.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t)>& fn) {
  unsigned workers = thread_count();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace taustar
