#ifndef UKOSZUL_PARALLEL_HPP
#define UKOSZUL_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace ukoszul {

/// Run task(i) for every i in [0, count) on up to `jobs` threads, pulling
/// indices from a shared counter. Tasks must not touch shared mutable state
/// except through their own synchronization. Exceptions from tasks are
/// rethrown on the calling thread (first one wins, by thread start order).
inline void parallel_for(std::size_t count, std::size_t jobs,
                         const std::function<void(std::size_t)>& task) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            task(i);
        return;
    }
    const std::size_t workers = std::min(jobs, count);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= count)
                        return;
                    task(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace ukoszul

#endif
