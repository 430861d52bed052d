#pragma once

#include <functional>

namespace torc {

// Worker count: min(TORCFG_THREADS, hardware concurrency), at least 1.
int thread_count();

// Runs fn(begin, end) over a partition of [0, n) on thread_count() workers.
// Chunks are fixed by n and the worker count, so any merge done in chunk
// order is deterministic.
void parallel_chunks(long long n, const std::function<void(long long, long long)>& fn);

}  // namespace torc
