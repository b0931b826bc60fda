#pragma once

#include "sgmc/rng.hpp"
#include "sgmc/spectral.hpp"

namespace sgmc {

/// grad P_{eps^2} f: mode pair k picks up the factor
/// 2 pi k exp(-4 pi^2 k^2 eps^2) together with the sin/cos rotation.
/// Rejects eps <= 0.
SpectralField grad_mollifier_action(const SpectralField& f, double eps);

/// Discrete Ito pairing sum_m h_m dw_m.  Mean zero, variance |h|^2 dt.
/// Rejects a cutoff mismatch.
double white_noise_pairing(const SpectralField& h, const BrownianIncrements& inc);

enum class BracketKind { grad_mollified, fractional_quarter };

/// Closed-form cell norms sup_n n^alpha ||zeta(1_{[s,s+n^{-2}]} (x) e_n)||_L2:
/// the cell value is n^{-1} eps^{3/4} 2 pi k e^{-4 pi^2 k^2 eps^2} for the
/// eps^{3/4}-scaled gradient noise and n^{-1} (2 pi k)^{1/2} e^{-4 pi^2 k^2 eps^2}
/// for the quarter-fractional one.  The n-scan stops at max(64, ceil(10/eps)).
double bracket_norm(BracketKind kind, double alpha, double eps);

/// Exact second moment of one bracket cell, for oracle comparisons.
double bracket_cell_value(BracketKind kind, int n, double eps);

/// Per-step noise fields shared by every stochastic integral on a path.
/// `white` holds the raw increments as coefficients of e_m; `kernel_*` hold
/// the field the integrand is multiplied by:
///   mollified dynamics:  -grad P_{eps^2} W   (so that the integral of f
///   against grad xi_eps equals the white-noise integral of grad P_{eps^2} f)
///   limit dynamics:      W itself.
struct StepNoise {
  SpectralField white;
  SpectralField kernel_spec;
  GridField kernel_grid;
};

void make_mollified_noise(const BrownianIncrements& inc, double eps,
                          const SpectralTransform& tr, StepNoise& out);
void make_white_noise(const BrownianIncrements& inc, const SpectralTransform& tr,
                      StepNoise& out);

}  // namespace sgmc
