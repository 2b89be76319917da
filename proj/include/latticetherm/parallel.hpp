#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace ltherm {

// Runs fn(i) for i in [0, n) on up to `workers` threads. Tasks pull
// indices from a shared counter; results must be written to caller-owned,
// index-keyed slots so assembly stays deterministic. The first exception
// (lowest index) is rethrown after all workers join.
inline void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    if (workers <= 1 || n == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    workers = std::min(workers, n);
    std::atomic<int> next{0};
    std::vector<std::pair<int, std::exception_ptr>> errors(workers, {n, nullptr});
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            while (true) {
                const int i = next.fetch_add(1);
                if (i >= n) break;
                try {
                    fn(i);
                } catch (...) {
                    if (i < errors[w].first) errors[w] = {i, std::current_exception()};
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    std::pair<int, std::exception_ptr> first{n, nullptr};
    for (const auto& e : errors)
        if (e.second && e.first < first.first) first = e;
    if (first.second) std::rethrow_exception(first.second);
}

}
