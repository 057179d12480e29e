#pragma once

#include <cstddef>
#include <functional>

namespace chiralswitch {

/// Number of worker threads the sweep engine will use: hardware concurrency,
/// capped by the CHIRAL_SWITCH_THREADS environment variable when set.
unsigned worker_count();

/// Runs fn(0..n-1) on a work pool. Each index is processed exactly once;
/// callers own output ordering (write results by index). fn must not throw
/// concurrently-unrecoverable errors: exceptions are captured and the first
/// one is rethrown after all workers drain.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace chiralswitch
