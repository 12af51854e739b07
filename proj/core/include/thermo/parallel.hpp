#pragma once

#include <functional>

namespace thermo {

// Runs fn(0..n-1) across worker threads; THERMOSCOPE_THREADS caps the pool
// (1 disables threading).  Each index owns its output slot, so results are
// identical regardless of the thread count.
void parallel_for(int n, const std::function<void(int)>& fn);

int thread_budget();

} // namespace thermo
