#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace dold {

/// Worker count from DOLD_THREADS, else the hardware concurrency (at least 1).
inline unsigned default_parallelism() {
    if (const char* env = std::getenv("DOLD_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Applies fn to every index in [0, count) on up to `workers` threads and
/// returns the results in index order. The first exception thrown by any
/// task is rethrown on the caller's thread.
template <typename Fn>
auto parallel_map_ordered(std::size_t count, unsigned workers, Fn&& fn) {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<Result> results(count);
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::jthread> pool;
    const auto n = std::min<std::size_t>(workers, count);
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work);
    pool.clear();
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace dold
