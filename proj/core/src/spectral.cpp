#include "sgmc/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace sgmc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
const double kSqrt2 = std::sqrt(2.0);

// FFTW planning is not thread safe; execution on private buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

SpectralField SpectralField::unit(int mode_cutoff, int n) {
  SpectralField f(mode_cutoff);
  f[n] = 1.0;
  return f;
}

double basis_value(int n, double x) {
  if (n == 1) return 1.0;
  const int k = wavenumber(n);
  const double arg = kTwoPi * k * x;
  return (n % 2 == 0) ? kSqrt2 * std::sin(arg) : kSqrt2 * std::cos(arg);
}

double synthesize(const SpectralField& f, double x) {
  double acc = 0.0;
  for (int n = 1; n <= f.mode_cutoff(); ++n) acc += f[n] * basis_value(n, x);
  return acc;
}

SpectralField apply_heat(const SpectralField& f, double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::invalid_argument("apply_heat: time must be finite and >= 0");
  SpectralField out = f;
  for (int n = 2; n <= f.mode_cutoff(); ++n) {
    const double lam = kTwoPi * wavenumber(n);
    out[n] *= std::exp(-lam * lam * t);
  }
  return out;
}

SpectralField apply_gradient(const SpectralField& f) {
  const int m = f.mode_cutoff();
  SpectralField out(m);
  for (int k = 1; 2 * k <= m; ++k) {
    const double lam = kTwoPi * k;
    const int ns = 2 * k, nc = 2 * k + 1;
    if (nc <= m) {
      out[nc] += lam * f[ns];
      out[ns] -= lam * f[nc];
    }
    // sine mode without a cosine partner inside the cutoff: its image
    // falls outside the band and is dropped by the truncation.
  }
  return out;
}

SpectralField apply_fractional_laplacian(const SpectralField& f, double gamma) {
  if (!(gamma >= 0.0))
    throw std::invalid_argument("apply_fractional_laplacian: gamma must be >= 0");
  if (gamma == 0.0) return f;  // identity, e_1 included
  SpectralField out(f.mode_cutoff());
  for (int n = 2; n <= f.mode_cutoff(); ++n) {
    const double lam = kTwoPi * wavenumber(n);
    out[n] = f[n] * std::pow(lam * lam, 0.5 * gamma);
  }
  return out;
}

double inner(const SpectralField& a, const SpectralField& b) {
  if (a.mode_cutoff() != b.mode_cutoff())
    throw std::invalid_argument("inner: mode cutoff mismatch");
  double acc = 0.0;
  for (int n = 1; n <= a.mode_cutoff(); ++n) acc += a[n] * b[n];
  return acc;
}

double l2_norm(const SpectralField& f) { return std::sqrt(inner(f, f)); }

int grid_size_for(int mode_cutoff) {
  int n = 32;
  while (n < 4 * mode_cutoff) n *= 2;
  return n;
}

struct SpectralTransform::Impl {
  double* real = nullptr;
  fftw_complex* cplx = nullptr;
  fftw_plan fwd = nullptr;   // r2c
  fftw_plan bwd = nullptr;   // c2r
};

SpectralTransform::SpectralTransform(int mode_cutoff, int grid_size)
    : mode_cutoff_(mode_cutoff), grid_size_(grid_size), impl_(new Impl) {
  if (mode_cutoff < 1) throw std::invalid_argument("mode cutoff must be >= 1");
  if (grid_size < 2 * mode_cutoff + 2)
    throw std::invalid_argument("grid size must satisfy N >= 2M + 2");
  impl_->real = fftw_alloc_real(grid_size);
  impl_->cplx = fftw_alloc_complex(grid_size / 2 + 1);
  std::lock_guard<std::mutex> lock(planner_mutex());
  // FFTW_ESTIMATE keeps plan selection deterministic run to run.
  impl_->fwd = fftw_plan_dft_r2c_1d(grid_size, impl_->real, impl_->cplx, FFTW_ESTIMATE);
  impl_->bwd = fftw_plan_dft_c2r_1d(grid_size, impl_->cplx, impl_->real, FFTW_ESTIMATE);
}

SpectralTransform::~SpectralTransform() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(impl_->fwd);
  fftw_destroy_plan(impl_->bwd);
  fftw_free(impl_->real);
  fftw_free(impl_->cplx);
}

void SpectralTransform::synthesize(const SpectralField& f, GridField& out) const {
  if (f.mode_cutoff() > mode_cutoff_)
    throw std::invalid_argument("synthesize: field exceeds transform cutoff");
  const int n = grid_size_;
  const int nc = n / 2 + 1;
  for (int i = 0; i < nc; ++i) impl_->cplx[i][0] = impl_->cplx[i][1] = 0.0;
  // f = a_1 + sum_k sqrt(2)(a_{2k} sin + a_{2k+1} cos)
  //   => Fourier coefficient at +k is (a_{2k+1} - i a_{2k})/sqrt(2).
  impl_->cplx[0][0] = (f.mode_cutoff() >= 1) ? f[1] : 0.0;
  for (int k = 1; 2 * k <= f.mode_cutoff(); ++k) {
    const double a = f[2 * k];
    const double b = (2 * k + 1 <= f.mode_cutoff()) ? f[2 * k + 1] : 0.0;
    impl_->cplx[k][0] = b / kSqrt2;
    impl_->cplx[k][1] = -a / kSqrt2;
  }
  fftw_execute(impl_->bwd);
  out.values.assign(impl_->real, impl_->real + n);
}

GridField SpectralTransform::synthesize(const SpectralField& f) const {
  GridField g;
  synthesize(f, g);
  return g;
}

void SpectralTransform::analyze(const GridField& g, SpectralField& out) const {
  if (g.size() != grid_size_)
    throw std::invalid_argument("analyze: grid size mismatch");
  const int n = grid_size_;
  for (int i = 0; i < n; ++i) impl_->real[i] = g.values[i];
  fftw_execute(impl_->fwd);
  out.coeffs.assign(mode_cutoff_, 0.0);
  const double inv = 1.0 / n;
  out[1] = impl_->cplx[0][0] * inv;
  for (int k = 1; 2 * k <= mode_cutoff_; ++k) {
    out[2 * k] = -kSqrt2 * impl_->cplx[k][1] * inv;
    if (2 * k + 1 <= mode_cutoff_) out[2 * k + 1] = kSqrt2 * impl_->cplx[k][0] * inv;
  }
}

SpectralField SpectralTransform::analyze(const GridField& g) const {
  SpectralField f;
  analyze(g, f);
  return f;
}

double heat_kernel_value(double t, double x) {
  if (!(t > 0.0)) throw std::invalid_argument("heat_kernel_value: t must be > 0");
  const double pref = 1.0 / std::sqrt(4.0 * M_PI * t);
  double acc = std::exp(-x * x / (4.0 * t));
  for (int k = 1;; ++k) {
    const double a = x - k, b = x + k;
    const double term = std::exp(-a * a / (4.0 * t)) + std::exp(-b * b / (4.0 * t));
    acc += term;
    if (term < 1e-16) break;
  }
  return pref * acc;
}

double heat_deriv_l2norm_sq(int deriv_order, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("heat_deriv_l2norm_sq: t must be > 0");
  if (deriv_order < 0 || deriv_order > 2)
    throw std::invalid_argument("heat_deriv_l2norm_sq: order must be 0, 1 or 2");
  double acc = (deriv_order == 0) ? 1.0 : 0.0;  // k = 0 term
  for (int k = 1;; ++k) {
    const double lam = kTwoPi * k;
    const double term = 2.0 * std::pow(lam * lam, deriv_order) *
                        std::exp(-8.0 * M_PI * M_PI * k * k * t);
    acc += term;
    if (term < 1e-18 * acc) break;
  }
  return acc;
}

}  // namespace sgmc
