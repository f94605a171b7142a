#pragma once

#include <cstddef>
#include <functional>

namespace dg {

// Worker thread count. Initialised from DEEP_GALAXY_THREADS on first use
// (default 1). The count only decides how independent work is split;
// results are bit-identical at any value.
int thread_count();

// Overrides the thread count for the rest of the process. Values < 1
// are clamped to 1.
void set_thread_count(int n);

// Invokes fn(begin, end) over disjoint chunks of [0, n). Each index is
// processed exactly once; chunks may run on separate threads. fn must
// write only to locations owned by its index range.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace dg
