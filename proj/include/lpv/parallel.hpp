#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace lpv {

/// Splits [0, n) into `jobs` contiguous chunks and runs fn(begin, end, chunk)
/// on each, in worker threads when jobs > 1. Callers keep per-chunk output
/// and merge it in chunk order, so results do not depend on scheduling.
template <class Fn>
void parallel_chunks(std::size_t n, std::size_t jobs, Fn&& fn) {
  if (jobs <= 1 || n < 2 * jobs) {
    fn(std::size_t{0}, n, std::size_t{0});
    return;
  }
  std::vector<std::thread> workers;
  std::size_t chunk = (n + jobs - 1) / jobs;
  for (std::size_t j = 0; j < jobs; ++j) {
    std::size_t begin = j * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&fn, begin, end, j] { fn(begin, end, j); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace lpv
