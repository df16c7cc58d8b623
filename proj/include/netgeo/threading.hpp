#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace netgeo {

// Resolves a worker count: explicit value wins, then the NETGEO_THREADS
// environment variable, then hardware concurrency.
int resolve_threads(int requested);

// Runs fn(task_index) for task_index in [0, tasks) on up to `threads`
// workers. Tasks must write only to their own output slots; results are then
// independent of the worker count. The first exception (lowest task index)
// is rethrown after all workers join.
template <class Fn>
void parallel_for(int64_t tasks, int threads, Fn&& fn) {
    if (tasks <= 0) return;
    const int workers = static_cast<int>(std::min<int64_t>(resolve_threads(threads), tasks));
    if (workers <= 1) {
        for (int64_t i = 0; i < tasks; ++i) fn(i);
        return;
    }
    std::atomic<int64_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<size_t>(tasks));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int64_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= tasks) return;
                try {
                    fn(i);
                } catch (...) {
                    errors[static_cast<size_t>(i)] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace netgeo
