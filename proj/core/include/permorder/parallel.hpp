#pragma once

#include <cstdint>
#include <functional>

namespace permorder {

/// Worker cap: min(hardware threads, PERMORDER_WORKERS when set). At least 1.
int worker_count();

/// Runs fn(i) for i in [begin, end) across the worker pool. Iteration order
/// is unspecified; callers own any aggregation and must keep it
/// order-independent or index-keyed.
void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t)>& fn, int workers = 0);

}  // namespace permorder
