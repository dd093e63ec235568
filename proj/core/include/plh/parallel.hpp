#pragma once

#include <cstddef>
#include <functional>

namespace plh {

/// Worker count from PLH_THREADS, else the hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls fn(i) for i in [0, n) on up to worker_count() threads. Exceptions
/// propagate (the first one thrown by index order wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace plh
