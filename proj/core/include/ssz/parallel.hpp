#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ssz {

// Process-wide default worker count; 0 means hardware concurrency.
void set_default_jobs(unsigned jobs);
unsigned default_jobs();

// out[i] = fn(i) for i in [0, count), computed by up to `jobs` workers that
// claim indices dynamically. The result does not depend on the schedule.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t count, Fn fn, unsigned jobs = 0) {
    if (jobs == 0) jobs = default_jobs();
    std::vector<R> out(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

} // namespace ssz
