#pragma once

#include <cstddef>
#include <functional>

namespace qdirac {

/// Worker count for `jobs` independent jobs: hardware concurrency, capped by
/// the QDIRAC_THREADS environment variable and by the number of jobs.
unsigned worker_count(std::size_t jobs);

/// Runs body(0), ..., body(n-1) on a bounded pool. Results must be written to
/// per-index slots; if any job throws, the exception of the lowest failing
/// index is rethrown after all workers have stopped.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qdirac
