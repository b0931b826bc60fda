#include "sgmc/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sgmc {

int worker_count() {
  if (const char* env = std::getenv("SGMC_WORKERS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

void parallel_paths(std::uint64_t npaths,
                    const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
  const int workers = worker_count();
  if (workers <= 1 || npaths < 2) {
    fn(0, npaths);
    return;
  }
  const std::uint64_t nw = std::min<std::uint64_t>(workers, npaths);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (std::uint64_t w = 0; w < nw; ++w) {
    const std::uint64_t lo = npaths * w / nw;
    const std::uint64_t hi = npaths * (w + 1) / nw;
    pool.emplace_back([&, lo, hi] {
      try {
        fn(lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace sgmc
