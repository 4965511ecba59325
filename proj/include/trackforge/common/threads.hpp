#pragma once

#include <functional>

namespace trackforge {

// Worker cap: min(hardware_concurrency, TRACKFORGE_THREADS). Read once.
int max_threads();

// Runs fn(i) for i in [0, n) on up to max_threads() workers. Work is
// dealt in fixed contiguous chunks, so callers that write to disjoint
// per-index slots get results identical to a sequential loop.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace trackforge
