#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace tricode {

/// Splits [0, n) into `workers` contiguous ranges and runs fn(begin, end, worker) on each,
/// one thread per range. The first exception thrown by any worker is rethrown.
template <class Fn>
void parallel_ranges(std::uint64_t n, unsigned workers, Fn&& fn) {
    workers = std::max(1U, workers);
    if (workers > n) workers = static_cast<unsigned>(std::max<std::uint64_t>(n, 1));
    if (workers == 1) {
        fn(std::uint64_t{0}, n, 0U);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = n * w / workers;
        const std::uint64_t end = n * (w + 1) / workers;
        threads.emplace_back([&, begin, end, w] {
            try {
                fn(begin, end, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace tricode
