#ifndef HCN_PARALLEL_HPP
#define HCN_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace hcn {

// Worker count used by table construction: `requested` if nonzero, otherwise the
// HCN_THREADS environment variable, otherwise std::thread::hardware_concurrency().
unsigned resolve_thread_count(unsigned requested);

// Runs fn(0), ..., fn(n_blocks - 1), distributing block indices over `threads`
// workers through a shared atomic counter. Blocks must touch disjoint state; the
// result is then independent of the schedule. Exceptions from workers are rethrown.
void parallel_blocks(std::uint64_t n_blocks, unsigned threads,
                     const std::function<void(std::uint64_t)>& fn);

} // namespace hcn

#endif
