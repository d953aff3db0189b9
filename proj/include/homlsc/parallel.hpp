#pragma once

#include <cstddef>
#include <functional>

namespace homlsc {

// Worker cap: LSC_HOM_THREADS when set to a positive integer, otherwise the
// hardware concurrency. Re-read on every call so tests can vary it.
int thread_cap();

// Runs fn(i) for i in [0, count). Items are independent; any exception is
// rethrown for the lowest failing index, so results and errors do not depend
// on the worker count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace homlsc
