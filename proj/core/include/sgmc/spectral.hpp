#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace sgmc {

/// Real field on the torus T = R/Z stored as coefficients on the
/// orthonormal basis e_1 = 1, e_{2k} = sqrt(2) sin(2 pi k x),
/// e_{2k+1} = sqrt(2) cos(2 pi k x).  coeffs[i] is the coefficient of
/// e_{i+1}.
struct SpectralField {
  std::vector<double> coeffs;

  SpectralField() = default;
  explicit SpectralField(int mode_cutoff) : coeffs(mode_cutoff, 0.0) {}

  int mode_cutoff() const { return static_cast<int>(coeffs.size()); }
  double operator[](int n) const { return coeffs[n - 1]; }  // 1-based mode n
  double& operator[](int n) { return coeffs[n - 1]; }

  static SpectralField unit(int mode_cutoff, int n);
};

/// Point values on the uniform grid x_j = j/N, j = 0..N-1.
struct GridField {
  std::vector<double> values;

  GridField() = default;
  explicit GridField(int n) : values(n, 0.0) {}
  int size() const { return static_cast<int>(values.size()); }
};

/// Wavenumber of basis mode n: k(1) = 0, k(2k) = k(2k+1) = k.
inline int wavenumber(int n) { return n / 2; }

/// e_n evaluated at a point of [0,1).
double basis_value(int n, double x);

/// Pointwise synthesis sum_n coeffs_n e_n(x).
double synthesize(const SpectralField& f, double x);

/// Heat semigroup P_t: mode n scaled by exp(-(2 pi k)^2 t).  Rejects t < 0.
SpectralField apply_heat(const SpectralField& f, double t);

/// Spatial derivative: e_1 -> 0, a e_{2k} -> 2 pi k a e_{2k+1},
/// b e_{2k+1} -> -2 pi k b e_{2k}.
SpectralField apply_gradient(const SpectralField& f);

/// (-Laplace)^{gamma/2}: mode n scaled by ((2 pi k)^2)^{gamma/2}.
SpectralField apply_fractional_laplacian(const SpectralField& f, double gamma);

double inner(const SpectralField& a, const SpectralField& b);
double l2_norm(const SpectralField& f);

/// Smallest power of two >= max(4 M, 32); keeps quadratic grid products
/// alias-free after truncation back to M modes.
int grid_size_for(int mode_cutoff);

/// FFT-backed transform pair between M spectral modes and an N-point grid.
/// One instance per thread; instances own their FFTW plans and buffers.
class SpectralTransform {
 public:
  SpectralTransform(int mode_cutoff, int grid_size);
  ~SpectralTransform();
  SpectralTransform(const SpectralTransform&) = delete;
  SpectralTransform& operator=(const SpectralTransform&) = delete;

  int mode_cutoff() const { return mode_cutoff_; }
  int grid_size() const { return grid_size_; }

  void synthesize(const SpectralField& f, GridField& out) const;
  GridField synthesize(const SpectralField& f) const;

  /// Coefficients (f, e_n) for n <= M by the discrete transform; exact for
  /// band-limited input.  Throws if M violates N >= 2M + 2.
  void analyze(const GridField& g, SpectralField& out) const;
  SpectralField analyze(const GridField& g) const;

 private:
  int mode_cutoff_;
  int grid_size_;
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Periodic heat kernel p_t(x) = (4 pi t)^{-1/2} sum_k exp(-(x-k)^2/(4t)),
/// image terms truncated below 1e-16.  Rejects t <= 0.
double heat_kernel_value(double t, double x);

/// sum_{k in Z} (2 pi k)^{2j} exp(-8 pi^2 k^2 t), j in {0,1,2};
/// relative tail truncation 1e-18.  Rejects t <= 0.
double heat_deriv_l2norm_sq(int deriv_order, double t);

}  // namespace sgmc
