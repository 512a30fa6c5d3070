// parallel.hpp — Deterministic fork-join helper for data-parallel loops

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace twistlat {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, n). Each index is executed exactly once; results
// must be written to per-index slots so the outcome is independent of the
// thread count.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, int threads = 0) {
    if (n == 0) return;
    int nt = std::min<std::size_t>(resolve_threads(threads), n);
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::exception_ptr err;
    std::mutex err_mutex;
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            try {
                // contiguous block partition keeps per-thread work cache friendly
                std::size_t lo = n * t / nt;
                std::size_t hi = n * (t + 1) / nt;
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

} // namespace twistlat
