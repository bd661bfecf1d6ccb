#pragma once

#include <cstddef>
#include <functional>

namespace qwave {

/// Worker count: QWAVE_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
[[nodiscard]] unsigned worker_count_from_env();

/// Calls body(i) for i in [0, n) across at most `workers` threads, in
/// contiguous chunks. If any call throws, the exception from the lowest
/// failing index is rethrown after all workers finish.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body);

} // namespace qwave
