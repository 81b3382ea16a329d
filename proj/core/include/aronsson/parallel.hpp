#pragma once

#include <cstddef>
#include <functional>

namespace aronsson {

/// Worker count: ARONSSON_LAB_THREADS if set to a positive integer, capped by
/// hardware concurrency; otherwise hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Callers
/// write results into per-index slots, so output order is independent of
/// scheduling. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace aronsson
