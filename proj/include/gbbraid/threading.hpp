#ifndef GBBRAID_THREADING_HPP
#define GBBRAID_THREADING_HPP

#include <cstdint>
#include <functional>

namespace gbbraid {

// Global worker-thread count used by the bulk scans (cocycle validation,
// regularity checks).  Results are combined in chunk order, so the output is
// identical for every thread count.
int worker_threads();
void set_worker_threads(int n);

// Splits [0, total) into contiguous chunks and runs fn(begin, end, chunk)
// on the workers.  Chunk indices are dense starting at 0; with one worker
// everything runs inline.
void parallel_chunks(std::uint64_t total,
                     const std::function<void(std::uint64_t, std::uint64_t, int)>& fn);

}  // namespace gbbraid

#endif
