#pragma once
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gridhom {

inline unsigned default_jobs() {
    if (const char* env = std::getenv("GRIDHOM_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return (unsigned)j;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Simple counter-based work sharing; fn(index) must be thread-safe.
template <typename Fn>
void parallel_for(size_t count, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || count < 2) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

} // namespace gridhom
