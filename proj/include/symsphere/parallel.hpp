#pragma once
#include <cstddef>
#include <functional>

namespace symsphere {

// Number of worker threads: min(hardware_concurrency, SYMSPHERE_THREADS).
// SYMSPHERE_THREADS=1 forces serial execution.
std::size_t worker_count();

// Runs fn(i) for i in [0, count).  Work is split into contiguous chunks so
// the assignment of indices to threads is deterministic; results must not
// depend on execution order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace symsphere
