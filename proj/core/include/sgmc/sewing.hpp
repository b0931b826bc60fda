#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sgmc/solver.hpp"

namespace sgmc {

/// Dyadic path data for germ evaluation: samples on the level-`max_level`
/// grid of [0,1] (2^max_level + 1 points).  `scalar` carries one channel
/// (e.g. a Brownian path); `channels` carries per-mode families
/// (beta paths and frozen-coefficient series for the SPDE germ).
struct SewingPathContext {
  int max_level = 0;
  std::vector<double> scalar;
  std::vector<std::vector<double>> beta;    // [channel][grid index]
  std::vector<std::vector<double>> coeff;   // [channel][grid index]

  int points() const { return (1 << max_level) + 1; }
  double time_of(int i) const { return double(i) / double(1 << max_level); }
};

/// Two-parameter germ A_{s,t} with declared sewing exponents.  The evaluator
/// receives finest-grid indices i <= j; adaptedness means it reads only path
/// data up to index j.
struct Germ {
  double beta1 = 0.0;   // |t-s| exponent of the remainder channel
  double beta2 = 0.0;   // conditional-mean channel exponent (0: not declared)
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  std::function<double(const SewingPathContext&, int i, int j)> eval;
};

/// Sewn process on the level-L dyadic grid: A_t sums the germ over level-L
/// subintervals of [0, t].  A_0 = 0.
struct SewnPath {
  int level = 0;
  std::vector<double> values;  // 2^level + 1 entries
};

SewnPath sew(const Germ& germ, const SewingPathContext& ctx, int level);

/// A_{s,t} = h(t) - h(s); fixed point of sew at every level.
Germ additive_germ(std::function<double(double)> h);

/// A_{s,t} = W_s (W_t - W_s) on the scalar channel; sews to the Ito integral.
Germ ito_bm_germ();

/// Frozen SPDE germ A_{s,t} = sum_n coeff_n(s) (beta^n_t - beta^n_s) with
/// coeff_n(r) = (g'g(u_r) e_n, phi); beta1 = 5/8, martingale germ (Gamma2 = 0).
Germ frozen_spde_germ();

/// Builds the context channels of the frozen germ from a dense trajectory:
/// requires u_steps on [0,1] and a beta record aligned with the dyadic grid.
SewingPathContext make_spde_context(const Trajectory& traj, const SpectralField& phi,
                                    int max_level, Workspace& ws);

struct CharacterizationReport {
  double ratio_sup = 0.0;        // max over dyadic (s,t) of L2 ratio / |t-s|^beta1
  double refinement_growth = 0.0;  // ratio_sup(finest)/ratio_sup(coarsest)
  double mean_sup = 0.0;         // max |E(A_t - A_s - A_{s,t})| / |t-s|
  bool pass = false;
  std::string detail;
};

/// Estimates sup over dyadic (s,t) of ||A_t - A_s - A_{s,t}||_{L2(MC)} /
/// |t-s|^{beta1} over an ensemble of candidate paths; passes when the ratio
/// stays below `tolerance` and is stable under refinement (growth <= 2 per
/// level on average).  Martingale germs also require the mean channel to
/// vanish: mean_sup <= tolerance.
CharacterizationReport characterization_check(
    const std::vector<SewnPath>& candidates,
    const std::vector<SewingPathContext>& contexts, const Germ& germ,
    double tolerance);

}  // namespace sgmc
