#pragma once

#include <cstdint>
#include <functional>

namespace sgmc {

/// Worker count from SGMC_WORKERS, defaulting to the hardware concurrency.
int worker_count();

/// Runs fn(path_begin, path_end) on contiguous path ranges across workers.
/// Callers write per-path results into preallocated slots, so estimates are
/// independent of the worker layout.
void parallel_paths(std::uint64_t npaths,
                    const std::function<void(std::uint64_t, std::uint64_t)>& fn);

}  // namespace sgmc
