#pragma once

#include <functional>

namespace gp {

// Resolves the worker count for parallel loops. Order of precedence:
// a positive `requested`, then the GPL_THREADS environment variable,
// then std::thread::hardware_concurrency(). Always returns >= 1.
int resolve_threads(int requested = 0);

// Runs fn(i) for every i in [0, count), splitting the index range into
// contiguous slices, one per worker thread. fn must only write to state
// owned by index i, which makes the combined result bitwise independent
// of the worker count. The first exception thrown by any worker is
// rethrown on the calling thread after all workers have joined.
void parallel_for(long long count, int threads, const std::function<void(long long)>& fn);

}  // namespace gp
