#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace netcurv {

/// Chunk width used by all parallel passes. Fixed (not derived from the
/// thread count) so per-chunk partial results can be folded in chunk order
/// and the floating-point output is identical for any --threads value.
inline constexpr std::int64_t kParallelChunk = 256;

inline int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(chunk_index, begin, end) over [0, n) split into fixed-size
/// chunks. Chunks are claimed from an atomic counter; fn must only touch
/// state owned by its chunk.
inline void parallel_chunks(std::int64_t n, int threads,
                            const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& fn,
                            std::int64_t chunk = kParallelChunk) {
  if (n <= 0) return;
  const std::int64_t num_chunks = (n + chunk - 1) / chunk;
  threads = resolve_thread_count(threads);
  if (threads <= 1 || num_chunks == 1) {
    for (std::int64_t ci = 0; ci < num_chunks; ++ci) {
      fn(ci, ci * chunk, std::min(n, (ci + 1) * chunk));
    }
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::int64_t ci = next.fetch_add(1);
      if (ci >= num_chunks) break;
      fn(ci, ci * chunk, std::min(n, (ci + 1) * chunk));
    }
  };
  std::vector<std::thread> pool;
  int spawn = static_cast<int>(std::min<std::int64_t>(threads, num_chunks));
  pool.reserve(static_cast<std::size_t>(spawn) - 1);
  for (int t = 1; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace netcurv
