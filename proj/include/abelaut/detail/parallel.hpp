#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace abelaut::detail {

// Worker count: ABELAUT_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
inline unsigned worker_count() {
    if (const char* env = std::getenv("ABELAUT_THREADS")) {
        try {
            const long n = std::stol(env);
            if (n > 0) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// Evaluates fn(i) for i in [0, count) on a small pool; results keep index order
// so the merged output is deterministic. The first exception is rethrown.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& fn) {
    std::vector<T> results(count);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    results[i] = fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace abelaut::detail
