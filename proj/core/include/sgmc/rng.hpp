#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace sgmc {

/// Philox4x32-10 counter-based generator.  Identical (counter, key) pairs
/// produce identical output on every platform, which is what makes paths
/// reproducible independently of thread scheduling.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Per-mode Gaussian increments Delta w^m for one time step, each N(0, dt).
struct BrownianIncrements {
  std::vector<double> dw;
  double dt = 0.0;

  int mode_cutoff() const { return static_cast<int>(dw.size()); }
};

/// Stream coordinates: (master_seed, path_index) selects an independent
/// stream, step_counter advances along the path.  Reproducing the triple
/// reproduces the draws bit for bit.
struct RngStream {
  std::uint64_t master_seed = 0;
  std::uint64_t path_index = 0;
  std::uint64_t step_counter = 0;
};

/// Standard normal keyed by (seed, path, step, index); index enumerates the
/// draws inside one step.
double normal_draw(std::uint64_t master_seed, std::uint64_t path_index,
                   std::uint64_t step, std::uint32_t index);

/// M i.i.d. N(0, dt) increments; advances stream.step_counter.
/// Rejects dt <= 0 and M < 1.
BrownianIncrements sample_increments(RngStream& stream, int mode_cutoff, double dt);

/// Uniform on [0,1) keyed like normal_draw but in a separate counter domain;
/// used by test helpers that need auxiliary randomness.
double uniform_draw(std::uint64_t master_seed, std::uint64_t path_index,
                    std::uint64_t step, std::uint32_t index);

}  // namespace sgmc
