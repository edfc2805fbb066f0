#pragma once

#include <cstddef>
#include <functional>

namespace cforge {

/// Number of worker threads to use. Reads CONGRUENCE_FORGE_THREADS once;
/// falls back to std::thread::hardware_concurrency(). Always >= 1.
unsigned worker_count();

/// Override the worker count for the rest of the process (0 restores the
/// environment/hardware default).
void set_worker_count(unsigned n);

/// Calls body(lo, hi) over disjoint chunks covering [begin, end). Chunks are
/// contiguous and may run concurrently; body must only touch state owned by
/// its chunk. Exceptions from any chunk are rethrown on the calling thread.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace cforge
