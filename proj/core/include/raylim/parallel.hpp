#pragma once

#include <cstddef>
#include <functional>

namespace raylim {

/// Process-wide cap on worker threads. 0 restores the hardware default.
void set_thread_count(int n);
int thread_count();

/// Runs fn(i) for i in [0, n) on static contiguous chunks. Callers get
/// deterministic results by writing to disjoint pre-sized slots; reductions
/// happen after the join, in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace raylim
