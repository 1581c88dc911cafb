#pragma once

#include <cstdint>
#include <functional>

namespace knapsack {

// Worker cap: min(hardware_concurrency, KNAPSACK_THREADS) with the
// environment variable read once per process.
int thread_limit();

// Static partition of [0, count) into contiguous chunks, one per worker.
// Chunks run on std::thread; the callable receives [lo, hi).
void parallel_for(std::int64_t count, const std::function<void(std::int64_t, std::int64_t)>& body);

}  // namespace knapsack
