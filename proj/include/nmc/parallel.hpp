#pragma once

#include <cstddef>
#include <functional>

namespace nmc::parallel {

// Clamps a requested worker count to [1, hardware_concurrency]; 0 means "use
// all hardware threads".
int resolve_threads(int requested);

// Runs fn(begin, end) over [0, count) split into fixed-size blocks. Block
// boundaries depend only on count and block_size, never on the worker count,
// so callers that write per-block results and reduce them in block order get
// identical output for any number of threads.
void for_blocks(std::size_t count, std::size_t block_size, int threads,
                const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace nmc::parallel
