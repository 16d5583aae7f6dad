#include "nmc/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace nmc::parallel {

int resolve_threads(int requested) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (requested <= 0) return static_cast<int>(hw);
  return std::min(requested, static_cast<int>(hw));
}

void for_blocks(std::size_t count, std::size_t block_size, int threads,
                const std::function<void(std::size_t, std::size_t)>& fn) {
  if (count == 0) return;
  if (block_size == 0) block_size = 1;
  const std::size_t num_blocks = (count + block_size - 1) / block_size;
  if (threads <= 1 || num_blocks == 1) {
    for (std::size_t b = 0; b < num_blocks; ++b) {
      const std::size_t begin = b * block_size;
      fn(begin, std::min(begin + block_size, count));
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= num_blocks) return;
      const std::size_t begin = b * block_size;
      fn(begin, std::min(begin + block_size, count));
    }
  };
  const int nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads), num_blocks);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace nmc::parallel
