#include "sgmc/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace sgmc {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& c,
                         const std::array<std::uint32_t, 2>& k) {
  const std::uint64_t p0 = std::uint64_t(kPhiloxM0) * c[0];
  const std::uint64_t p1 = std::uint64_t(kPhiloxM1) * c[2];
  const std::array<std::uint32_t, 4> out = {
      std::uint32_t(p1 >> 32) ^ c[1] ^ k[0], std::uint32_t(p1),
      std::uint32_t(p0 >> 32) ^ c[3] ^ k[1], std::uint32_t(p0)};
  c = out;
}

// Two uniforms from one philox block: 53-bit mantissas from the four words.
// u1 lies in (0, 1] so that log(u1) is finite; u2 in [0, 1).
inline void block_to_uniforms(const std::array<std::uint32_t, 4>& r, double& u1,
                              double& u2) {
  const std::uint64_t a = (std::uint64_t(r[0]) << 32) | r[1];
  const std::uint64_t b = (std::uint64_t(r[2]) << 32) | r[3];
  u1 = double((a >> 11) + 1) * 0x1.0p-53;
  u2 = double(b >> 11) * 0x1.0p-53;
}

// Counter layout: c0 = draw index, c1 = step low, c2 = step high ^ path low,
// c3 = path high ^ domain tag.  Key carries the master seed.
inline std::array<std::uint32_t, 4> counter_for(std::uint64_t path,
                                                std::uint64_t step,
                                                std::uint32_t index,
                                                std::uint32_t domain) {
  return {index, std::uint32_t(step),
          std::uint32_t(step >> 32) ^ std::uint32_t(path),
          std::uint32_t(path >> 32) ^ domain};
}

inline std::array<std::uint32_t, 2> key_for(std::uint64_t seed) {
  return {std::uint32_t(seed), std::uint32_t(seed >> 32)};
}

inline void normal_pair(std::uint64_t seed, std::uint64_t path, std::uint64_t step,
                        std::uint32_t pair_index, double& z0, double& z1) {
  const auto r = philox4x32(counter_for(path, step, pair_index, 0u), key_for(seed));
  double u1, u2;
  block_to_uniforms(r, u1, u2);
  const double rad = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * M_PI * u2;
  z0 = rad * std::cos(ang);
  z1 = rad * std::sin(ang);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    philox_round(counter, key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return counter;
}

double normal_draw(std::uint64_t master_seed, std::uint64_t path_index,
                   std::uint64_t step, std::uint32_t index) {
  double z0, z1;
  normal_pair(master_seed, path_index, step, index >> 1, z0, z1);
  return (index & 1u) ? z1 : z0;
}

BrownianIncrements sample_increments(RngStream& stream, int mode_cutoff, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("sample_increments: dt must be > 0");
  if (mode_cutoff < 1)
    throw std::invalid_argument("sample_increments: mode cutoff must be >= 1");
  BrownianIncrements inc;
  inc.dt = dt;
  inc.dw.resize(mode_cutoff);
  const double sigma = std::sqrt(dt);
  for (std::uint32_t pair = 0; 2 * pair < std::uint32_t(mode_cutoff); ++pair) {
    double z0, z1;
    normal_pair(stream.master_seed, stream.path_index, stream.step_counter, pair,
                z0, z1);
    inc.dw[2 * pair] = sigma * z0;
    if (2 * pair + 1 < std::uint32_t(mode_cutoff)) inc.dw[2 * pair + 1] = sigma * z1;
  }
  ++stream.step_counter;
  return inc;
}

double uniform_draw(std::uint64_t master_seed, std::uint64_t path_index,
                    std::uint64_t step, std::uint32_t index) {
  const auto r = philox4x32(counter_for(path_index, step, index, 1u),
                            key_for(master_seed));
  double u1, u2;
  block_to_uniforms(r, u1, u2);
  return u2;
}

}  // namespace sgmc
