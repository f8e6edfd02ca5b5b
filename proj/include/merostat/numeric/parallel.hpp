#pragma once

// Static-partition parallel loop.  The thread count honours MEROSTAT_THREADS;
// each index is handled by exactly one worker, so results do not depend on it.

#include <cstddef>
#include <functional>

namespace merostat::numeric {

int thread_count();

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace merostat::numeric
