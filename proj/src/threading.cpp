#include "gbbraid/threading.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "gbbraid/errors.hpp"

namespace gbbraid {

namespace {
int g_threads = 1;
}

int worker_threads() { return g_threads; }

void set_worker_threads(int n) {
  if (n < 1 || n > 256) throw ValidationError("thread count must be in [1,256]");
  g_threads = n;
}

void parallel_chunks(std::uint64_t total,
                     const std::function<void(std::uint64_t, std::uint64_t, int)>& fn) {
  int nthreads = std::min<std::uint64_t>(g_threads, std::max<std::uint64_t>(total, 1));
  if (nthreads <= 1) {
    fn(0, total, 0);
    return;
  }
  std::uint64_t per = (total + nthreads - 1) / nthreads;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(nthreads);
  for (int t = 0; t < nthreads; ++t) {
    std::uint64_t begin = per * t;
    std::uint64_t end = std::min<std::uint64_t>(begin + per, total);
    if (begin >= end) break;
    pool.emplace_back([&fn, &errors, begin, end, t] {
      try {
        fn(begin, end, t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace gbbraid
