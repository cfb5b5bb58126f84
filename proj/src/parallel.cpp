#include "hcn/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hcn {

unsigned resolve_thread_count(unsigned requested) {
    if (requested != 0) return requested;
    if (const char* env = std::getenv("HCN_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_blocks(std::uint64_t n_blocks, unsigned threads,
                     const std::function<void(std::uint64_t)>& fn) {
    if (n_blocks == 0) return;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(threads == 0 ? 1 : threads, n_blocks));
    if (workers <= 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) fn(b);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
                if (b >= n_blocks || failed.load(std::memory_order_relaxed)) return;
                try {
                    fn(b);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace hcn
