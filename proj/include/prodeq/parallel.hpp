#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace prodeq {

// Run fn(i) for every i in [lo, hi] on up to `threads` workers.  Work items
// are claimed atomically; callers own any output slots, so results do not
// depend on the number of threads.
template <class F>
void parallel_for_chunks(std::uint64_t lo, std::uint64_t hi, int threads, F&& fn) {
    if (hi < lo) return;
    if (threads <= 1) {
        for (std::uint64_t i = lo; i <= hi; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{lo};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            std::uint64_t i = next.fetch_add(1);
            if (i > hi || failed.load(std::memory_order_relaxed)) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int nw = threads;
    if (hi - lo + 1 < static_cast<std::uint64_t>(nw)) nw = static_cast<int>(hi - lo + 1);
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace prodeq
