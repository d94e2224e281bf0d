#pragma once

#include <cstddef>
#include <functional>

namespace hct {

// Worker count from HCT_THREADS (default: hardware concurrency, at least 1).
unsigned worker_count();

// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index is processed exactly
// once, so results written to slot i are independent of scheduling. The first exception thrown
// by any body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hct
