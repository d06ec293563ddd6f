#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace prelie {

// PRELIE_THREADS if set (clamped to >= 1), otherwise hardware concurrency.
int default_thread_count();

// Static block partition of [0, count) over the given number of threads.
// Bodies write to disjoint slots, so results never depend on scheduling.
template <typename Body>
void parallel_for(std::size_t count, int threads, const Body& body) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    pool.emplace_back([begin, end, &body] {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace prelie
