#pragma once

#include <cstddef>
#include <functional>

namespace lsob {

/// Number of workers: LSOB_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
int worker_count();

/// Calls fn(i) for i in [0, n) across worker_count() threads. Callers write
/// results into slot i, so output order never depends on scheduling. The
/// first exception thrown by any call is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lsob
