#include "gtsr/core.hpp"

#include <algorithm>
#include <atomic>

namespace gtsr {

namespace {
int g_threads = 1;
}

void set_thread_count(int n) {
    if (n <= 0) n = int(std::thread::hardware_concurrency());
    g_threads = std::max(1, n);
}

int thread_count() { return g_threads; }

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    if (n == 0) return;
    const int workers = std::min<size_t>(g_threads, n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const size_t begin = size_t(w) * chunk;
        const size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] {
            for (size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace gtsr
