#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace explab {

/// Worker count: EXPLAB_THREADS if set to a positive integer, else hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("EXPLAB_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(chunk) for chunk in [0, chunks) on up to worker_count() threads.
/// Chunks are independent; callers merge per-chunk results in chunk order,
/// so the outcome does not depend on scheduling.
template <class Fn>
void parallel_chunks(std::uint64_t chunks, Fn&& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), chunks));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::uint64_t c = w; c < chunks; c += workers) fn(c);
    });
  for (auto& t : pool) t.join();
}

}  // namespace explab
