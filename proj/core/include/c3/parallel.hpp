#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace c3 {

/// Runs fn(begin, end) over contiguous, disjoint chunks of [0, n).
/// Chunks never share output slots, so results do not depend on `threads`
/// as long as fn writes only to indices inside its chunk.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  constexpr std::size_t kMinChunk = 4096;
  std::size_t workers = std::max(1u, threads);
  workers = std::min(workers, (n + kMinChunk - 1) / kMinChunk);
  if (workers <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  fn(std::size_t{0}, std::min(n, chunk));
}

}  // namespace c3
