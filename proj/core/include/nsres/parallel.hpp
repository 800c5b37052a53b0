#pragma once

#include <cstddef>
#include <functional>

namespace nsres {

// Worker count used by parallel_for: the NSRES_THREADS environment variable
// when it parses as a positive integer, otherwise hardware concurrency.
unsigned thread_budget();

// Runs fn(0), ..., fn(n-1), distributing indices over the thread budget.
// fn must tolerate concurrent calls on distinct indices; the first exception
// thrown is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace nsres
