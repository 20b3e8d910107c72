#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace skewband {

inline int default_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// Runs fn(0) .. fn(count-1), fanning out over `threads` workers when
// threads > 1.  Work items are claimed from a shared counter, so callers
// must make fn safe to run concurrently for distinct indices.  Results
// should be written to preallocated per-index slots; that keeps the
// output deterministic regardless of scheduling.
template <typename Fn>
void parallel_for(std::int64_t count, int threads, Fn&& fn) {
  if (count <= 0) return;
  if (threads <= 1 || count == 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  if (static_cast<std::int64_t>(threads) > count)
    threads = static_cast<int>(count);
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&next, count, &fn] {
      for (;;) {
        std::int64_t i = next.fetch_add(1);
        if (i >= count) break;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace skewband
