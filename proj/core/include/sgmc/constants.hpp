#pragma once

#include <string>
#include <vector>

namespace sgmc {

/// Variance rate of the limiting iterated-integral Brownian motions,
/// (64 sqrt(pi))^{-1}.
double c0();

/// Coefficient of g'g(u) xi in the limit equation, (8 pi^{1/4})^{-1};
/// its square is c0().
double limit_coefficient();

/// Closed form of int_R x^4 exp(-8 pi^2 x^2) dx = 3 / (512 sqrt(2) pi^{9/2}).
double gaussian_x4_integral();

/// Independent adaptive-Simpson evaluation of the same integral.
double gaussian_x4_integral_quadrature();

/// |direct mode sum - (3/(32 sqrt(2 pi))) t^{-5/2}| * t^2 for the squared
/// L2 norm of grad^2 P_t.
double heat_norm_asymptotic_error(double t);

/// Variance of <X_eps (-Lap)^{gamma/2} xi_eps, 1> on [0,1] x T by exact mode
/// sum and exact time integral:
///   sum_k 2 mu_k^{2 gamma} e^{-4 mu_k eps^2} [1/(2 mu_k) - (1 - e^{-2 mu_k})/(4 mu_k^2)],
/// mu_k = (2 pi k)^2.  gamma in [0, 1].
double variance_blowup(double gamma, double eps);

struct ConstantRow {
  std::string name;
  double closed_form = 0.0;
  double oracle = 0.0;
  double rel_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Every constant the toolkit relies on, each checked against an independent
/// evaluation route.
std::vector<ConstantRow> constant_report();

}  // namespace sgmc
