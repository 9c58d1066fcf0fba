#ifndef PLSEEDS_PARALLEL_HPP
#define PLSEEDS_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace plseeds {

inline int default_thread_count() {
    if (const char* env = std::getenv("PLSEEDS_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

/// Runs fn(i) for i in [0, count) on `width` threads, statically strided.
/// The first exception thrown by any item is rethrown on the caller.
template <typename F>
void parallel_for_index(long long count, int width, F&& fn) {
    if (width < 1) width = 1;
    if (width == 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(width));
    for (int t = 0; t < width; ++t) {
        pool.emplace_back([&, t]() {
            for (long long i = t; i < count; i += width) {
                if (failed.load(std::memory_order_relaxed)) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!failed.exchange(true)) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace plseeds

#endif
