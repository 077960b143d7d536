#ifndef CHROMATLAS_PARALLEL_HPP
#define CHROMATLAS_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace chromatlas {

/// Apply fn to every index in [0, count) using the given number of workers.
/// Each result lands in its own slot, so output order equals input order no
/// matter how the work interleaves.
template <class Result, class Fn>
std::vector<Result> parallel_ordered_map(std::size_t count, int workers, Fn fn) {
    std::vector<Result> results(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace chromatlas

#endif
