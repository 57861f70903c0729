#ifndef SYZLAB_THREADS_HPP
#define SYZLAB_THREADS_HPP

#include <cstddef>
#include <functional>

// Worker count for internal parallelism.  SYZLAB_THREADS caps it; results of
// every parallel routine in this library are independent of the count.

namespace syzlab {

std::size_t worker_count();

// Runs fn(begin, end) over a partition of [0, n) on worker threads; blocks
// until done.  Chunks are contiguous, so callers writing disjoint ranges need
// no locking.
void parallel_for_ranges(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace syzlab

#endif
