#pragma once

// Shared test helpers: quadrature oracles and deterministic random fields.

#include <cmath>
#include <functional>
#include <vector>

#include "sgmc/rng.hpp"
#include "sgmc/spectral.hpp"

namespace sgmc::test {

// (f, e_n) by midpoint quadrature on a fine grid; independent of the FFT path.
inline double quadrature_coefficient(const std::function<double(double)>& f, int n,
                                     int quad_points = 1 << 14) {
  double acc = 0.0;
  for (int i = 0; i < quad_points; ++i) {
    const double x = (i + 0.5) / quad_points;
    acc += f(x) * basis_value(n, x);
  }
  return acc / quad_points;
}

// deterministic pseudo-random band-limited field
inline SpectralField random_field(int mode_cutoff, std::uint64_t seed, double scale = 1.0) {
  SpectralField f(mode_cutoff);
  for (int n = 1; n <= mode_cutoff; ++n)
    f[n] = scale * normal_draw(seed, 7777, 0, std::uint32_t(n));
  return f;
}

inline double max_abs_diff(const SpectralField& a, const SpectralField& b) {
  double worst = 0.0;
  for (int n = 1; n <= a.mode_cutoff(); ++n)
    worst = std::max(worst, std::fabs(a[n] - b[n]));
  return worst;
}

}  // namespace sgmc::test
