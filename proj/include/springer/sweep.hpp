#pragma once

#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace springer {

// Apply fn to every item, results in input order. jobs <= 1 runs the plain
// serial loop (the reference path); otherwise the iterations run under
// OpenMP. Results land in a preallocated slot per index, so the merge is
// deterministic regardless of thread count. fn must not throw.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, int jobs, F&& fn)
    -> std::vector<decltype(fn(items.front()))> {
    using R = decltype(fn(items.front()));
    std::vector<R> out(items.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
#if defined(_OPENMP)
    const int nitems = static_cast<int>(items.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int i = 0; i < nitems; ++i) out[static_cast<size_t>(i)] = fn(items[static_cast<size_t>(i)]);
#else
    for (size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
#endif
    return out;
}

} // namespace springer
