#pragma once

#include <thread>
#include <vector>

namespace ffsga {

// Runs fn(lo, hi) over a contiguous partition of [0, n) on up to
// `workers` threads. Callers rely on every index being a pure function
// writing to disjoint slots, so the split cannot change results.
template <typename Fn>
void parallel_chunks(int n, int workers, Fn&& fn) {
    if (n <= 0) return;
    if (workers > n) workers = n;
    if (workers <= 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int lo = w * chunk;
        int hi = lo + chunk < n ? lo + chunk : n;
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace ffsga
