#include "sgmc/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace sgmc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

SpectralField grad_mollifier_action(const SpectralField& f, double eps) {
  if (!(eps > 0.0))
    throw std::invalid_argument("grad_mollifier_action: eps must be > 0");
  return apply_gradient(apply_heat(f, eps * eps));
}

double white_noise_pairing(const SpectralField& h, const BrownianIncrements& inc) {
  if (h.mode_cutoff() != inc.mode_cutoff())
    throw std::invalid_argument("white_noise_pairing: mode cutoff mismatch");
  double acc = 0.0;
  for (int n = 1; n <= h.mode_cutoff(); ++n) acc += h[n] * inc.dw[n - 1];
  return acc;
}

double bracket_cell_value(BracketKind kind, int n, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("bracket_cell_value: eps must be > 0");
  const int k = wavenumber(n);
  const double lam = kTwoPi * k;
  const double damp = std::exp(-lam * lam * eps * eps);
  const double mult = (kind == BracketKind::grad_mollified)
                          ? std::pow(eps, 0.75) * lam * damp
                          : std::sqrt(lam) * damp;
  return mult / n;
}

double bracket_norm(BracketKind kind, double alpha, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("bracket_norm: eps must be > 0");
  const int n_max = std::max(64, int(std::ceil(10.0 / eps)));
  double best = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double v = std::pow(double(n), alpha) * bracket_cell_value(kind, n, eps);
    if (v > best) best = v;
  }
  return best;
}

void make_mollified_noise(const BrownianIncrements& inc, double eps,
                          const SpectralTransform& tr, StepNoise& out) {
  out.white.coeffs.assign(inc.dw.begin(), inc.dw.end());
  // kernel = -grad P_{eps^2} W, the paper-identity form of d(grad xi_eps).
  out.kernel_spec = grad_mollifier_action(out.white, eps);
  for (double& c : out.kernel_spec.coeffs) c = -c;
  tr.synthesize(out.kernel_spec, out.kernel_grid);
}

void make_white_noise(const BrownianIncrements& inc, const SpectralTransform& tr,
                      StepNoise& out) {
  out.white.coeffs.assign(inc.dw.begin(), inc.dw.end());
  out.kernel_spec = out.white;
  tr.synthesize(out.kernel_spec, out.kernel_grid);
}

}  // namespace sgmc
