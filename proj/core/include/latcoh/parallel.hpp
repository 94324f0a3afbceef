#pragma once

#include <cstddef>
#include <functional>

namespace latcoh {

// Worker count: LATCOH_THREADS if set (>=1), otherwise hardware concurrency.
std::size_t thread_count();

// Runs fn(i) for i in [0, n). fn must be safe to call concurrently for
// distinct i; results must not depend on scheduling (every caller here writes
// to disjoint slots of a preallocated buffer).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace latcoh
