#pragma once

#include <array>
#include <vector>

#include "sgmc/solver.hpp"

namespace sgmc {

/// Iterated-integral paths beta^{eps,n} for n in [n_lo, n_hi], all driven by
/// the increments shared with the co-simulated convolution X.
struct BetaState {
  int n_lo = 0, n_hi = -1;
  std::vector<double> values;

  BetaState() = default;
  BetaState(int lo, int hi) : n_lo(lo), n_hi(hi), values(hi - lo + 1, 0.0) {}
  double value(int n) const { return values[n - n_lo]; }
};

/// X <- P_dt X + P_{theta dt}[ eps^{3/4} kernel ]: the stochastic convolution
/// J^eps_{0,.}[1] stepped on the current workspace noise.
void evolve_convolution_step(SpectralField& x, Workspace& ws);

/// Spec-level form on a fresh workspace-free call path.
SpectralField evolve_convolution(const SpectralField& x, const BrownianIncrements& inc,
                                 double eps, double dt,
                                 SemigroupPlacement placement = SemigroupPlacement::half);

/// Scalar K-type increment eps^{3/4} int_T f . kernel for the integrand grid
/// values f (left-point evaluation).  Equals sum_m (grad P_{eps^2} f, e_m) dw_m.
double k_increment(const GridField& f, Workspace& ws);

/// d beta^n = K-increment of e_n X; bitwise identical to k_increment on the
/// grid product e_n . X.
void beta_step(BetaState& beta, const GridField& x_grid, Workspace& ws);

/// Running mild integral J^eps_{s,.}[f]: state Y follows
/// Y <- P_dt Y + P_{theta dt}[ eps^{3/4} analyze(f . kernel) ].
class JIntegrator {
 public:
  explicit JIntegrator(int mode_cutoff) : y_(mode_cutoff) {}
  void step(const GridField& f, Workspace& ws);
  const SpectralField& value() const { return y_; }

 private:
  SpectralField y_;
};

/// Discrete M_t(phi) - M_s(phi) = (u_t - u_s, phi) - int_s^t (u_r, Lap phi) dr
/// with trapezoid quadrature on the dense record.  Throws when the record
/// does not cover [s, t]; flags dt > (t-s)/10 as insufficient resolution.
double martingale_increment(const Trajectory& traj, const SpectralField& phi,
                            double s, double t);

struct Decomposition {
  std::array<double, 6> terms{};         // bold-K 1..6, signs as displayed
  double k_direct = 0.0;                 // K_{s,t}[phi g(u)]
  double sum() const {
    double a = 0.0;
    for (double v : terms) a += v;
    return a;
  }
};

/// Recomputes the six-term split of K_{s,t}[phi g(u)] on one recorded path:
/// frozen heat-flow integrands, the convolution channel, the two J-commutator
/// terms and the averaged-derivative remainder, all on regenerated noise.
/// Requires traj to carry dense u and X records covering [s, t].
Decomposition decompose_increment(const Trajectory& traj, const SpectralField& phi,
                                  double s, double t, Workspace& ws);

}  // namespace sgmc
