#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bperiod {

/// Worker count used when a caller passes 0: hardware concurrency, at least 1.
[[nodiscard]] inline std::size_t default_threads() noexcept {
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/**
 * Calls body(k) for k in [0, count) using up to `threads` workers (0 = default).
 * Indices are split into contiguous chunks; body must only write state owned by
 * index k. The first exception thrown by any worker is rethrown.
 */
template <class Body>
void parallel_for(std::size_t count, std::size_t threads, Body&& body) {
    if (threads == 0) threads = default_threads();
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t k = 0; k < count; ++k) body(k);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    const std::size_t chunk = (count + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([&, begin, end] {
            try {
                for (std::size_t k = begin; k < end; ++k) body(k);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    workers.clear();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace bperiod
