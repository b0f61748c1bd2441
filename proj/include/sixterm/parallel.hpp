#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sixterm {

inline unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

/// Runs fn(i) for every i in [0, count), handing out indices dynamically to
/// at most `workers` threads. With workers <= 1 everything runs inline.
/// The first exception thrown by any fn is rethrown after all threads join.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto body = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const auto n = std::min<std::size_t>(workers, count);
        pool.reserve(n);
        for (std::size_t t = 0; t < n; ++t) pool.emplace_back(body);
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace sixterm
