#pragma once

// Index-parallel loop.  Every index is processed by exactly one worker and
// results are written to per-index slots, so output never depends on the
// number of threads.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace orbitq {

inline std::atomic<int>& thread_setting() {
    static std::atomic<int> n{1};
    return n;
}

inline void set_threads(int n) { thread_setting().store(std::max(1, n)); }
inline int threads() { return thread_setting().load(); }

template <class F>
void parallel_for(std::size_t n, F&& fn) {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
}

}  // namespace orbitq
