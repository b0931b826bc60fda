#include "sgmc/sewing.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sgmc {

SewnPath sew(const Germ& germ, const SewingPathContext& ctx, int level) {
  if (level > ctx.max_level)
    throw std::invalid_argument("sew: level exceeds the context resolution");
  const int cells = 1 << level;
  const int stride = 1 << (ctx.max_level - level);
  SewnPath out;
  out.level = level;
  out.values.resize(cells + 1);
  out.values[0] = 0.0;
  for (int c = 0; c < cells; ++c) {
    const int i = c * stride;
    const int j = i + stride;
    const double a = germ.eval(ctx, i, j);
    if (!std::isfinite(a))
      throw std::runtime_error("sew: germ evaluation failed on cell " +
                               std::to_string(c) + " of level " + std::to_string(level));
    out.values[c + 1] = out.values[c] + a;
  }
  return out;
}

Germ additive_germ(std::function<double(double)> h) {
  Germ g;
  g.beta1 = 1.0;
  g.beta2 = 2.0;
  g.gamma1 = 0.0;
  g.gamma2 = 0.0;
  g.eval = [h = std::move(h)](const SewingPathContext& ctx, int i, int j) {
    return h(ctx.time_of(j)) - h(ctx.time_of(i));
  };
  return g;
}

Germ ito_bm_germ() {
  Germ g;
  g.beta1 = 1.0;  // characterization exponent: ||int (W_r - W_s) dW|| ~ |t-s|
  g.beta2 = 2.0;  // martingale germ, conditional mean zero
  g.gamma2 = 0.0;
  g.eval = [](const SewingPathContext& ctx, int i, int j) {
    return ctx.scalar[i] * (ctx.scalar[j] - ctx.scalar[i]);
  };
  return g;
}

Germ frozen_spde_germ() {
  Germ g;
  g.beta1 = 0.625;
  g.beta2 = 2.0;  // conditional mean zero (martingale germ), Gamma2 = 0
  g.gamma2 = 0.0;
  g.eval = [](const SewingPathContext& ctx, int i, int j) {
    double acc = 0.0;
    for (std::size_t n = 0; n < ctx.beta.size(); ++n)
      acc += ctx.coeff[n][i] * (ctx.beta[n][j] - ctx.beta[n][i]);
    return acc;
  };
  return g;
}

SewingPathContext make_spde_context(const Trajectory& traj, const SpectralField& phi,
                                    int max_level, Workspace& ws) {
  SewingPathContext ctx;
  ctx.max_level = max_level;
  const int pts = ctx.points();
  const double h = traj.cfg.resolved_dt();
  const int steps_per_cell = int(std::llround(1.0 / ((1 << max_level) * h)));
  if (std::fabs(steps_per_cell * (1 << max_level) * h - 1.0) > 1e-9)
    throw std::invalid_argument("make_spde_context: dt must divide 2^-max_level");
  if (traj.beta.n_hi < traj.beta.n_lo)
    throw std::invalid_argument("make_spde_context: trajectory lacks beta channels");
  if (traj.dense_first_step != 0 || steps_per_cell % traj.dense_stride != 0 ||
      int(traj.u_steps.size()) <
          steps_per_cell * (1 << max_level) / traj.dense_stride + 1)
    throw std::invalid_argument("make_spde_context: trajectory lacks a dense u record");

  const int nb = traj.beta.n_hi - traj.beta.n_lo + 1;
  ctx.beta.assign(nb, std::vector<double>(pts));
  ctx.coeff.assign(nb, std::vector<double>(pts));

  GridField ug(ws.grid_size());
  const GridField phig = ws.transform().synthesize(phi);
  for (int i = 0; i < pts; ++i) {
    const int step = i * steps_per_cell;
    if (step % traj.beta.stride != 0)
      throw std::invalid_argument("make_spde_context: beta stride misses dyadic grid");
    const int bidx = step / traj.beta.stride;
    ws.transform().synthesize(traj.u_steps[step / traj.dense_stride], ug);
    for (int n = 0; n < nb; ++n) {
      ctx.beta[n][i] = traj.beta.series[n][bidx];
      const auto& row = ws.basis_row(traj.beta.n_lo + n);
      double acc = 0.0;
      for (int p = 0; p < ws.grid_size(); ++p)
        acc += ws.cfg().g.gprime_g(ug.values[p]) * row[p] * phig.values[p];
      ctx.coeff[n][i] = acc / double(ws.grid_size());
    }
  }
  return ctx;
}

CharacterizationReport characterization_check(
    const std::vector<SewnPath>& candidates,
    const std::vector<SewingPathContext>& contexts, const Germ& germ,
    double tolerance) {
  if (candidates.empty() || candidates.size() != contexts.size())
    throw std::invalid_argument("characterization_check: ensemble mismatch");
  const int level = candidates.front().level;
  const double npaths = double(candidates.size());
  CharacterizationReport rep;
  double coarse_ratio = 0.0, fine_ratio = 0.0;
  for (int ell = 1; ell <= level; ++ell) {
    const int cells = 1 << ell;
    const int stride_cand = 1 << (level - ell);
    double level_max = 0.0;
    for (int c = 0; c < cells; ++c) {
      // increments over [t_c, t_{c+1}] at level ell
      double sq = 0.0, mean = 0.0;
      for (std::size_t p = 0; p < candidates.size(); ++p) {
        const auto& ctx = contexts[p];
        const int ctx_stride = 1 << (ctx.max_level - ell);
        const double a = germ.eval(ctx, c * ctx_stride, (c + 1) * ctx_stride);
        const double inc = candidates[p].values[(c + 1) * stride_cand] -
                           candidates[p].values[c * stride_cand] - a;
        sq += inc * inc;
        mean += inc;
      }
      mean /= npaths;
      const double l2 = std::sqrt(sq / npaths);
      const double sd = std::sqrt(std::max(sq / npaths - mean * mean, 1e-300));
      const double dt = 1.0 / cells;
      level_max = std::max(level_max, l2 / std::pow(dt, germ.beta1));
      // conditional-mean channel as a t statistic, coarse levels only
      // (fine levels are Monte Carlo noise dominated)
      if (ell <= 6)
        rep.mean_sup = std::max(rep.mean_sup, std::fabs(mean) * std::sqrt(npaths) / sd);
    }
    if (ell == 1) coarse_ratio = level_max;
    if (ell == level) fine_ratio = level_max;
    rep.ratio_sup = std::max(rep.ratio_sup, level_max);
  }
  rep.refinement_growth = (coarse_ratio > 0.0) ? fine_ratio / coarse_ratio : 0.0;
  rep.pass = rep.ratio_sup <= tolerance && rep.refinement_growth <= 4.0 &&
             (germ.gamma2 > 0.0 || rep.mean_sup <= 6.0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "ratio_sup=%.6g refinement_growth=%.3g mean_tstat=%.3g",
                rep.ratio_sup, rep.refinement_growth, rep.mean_sup);
  rep.detail = buf;
  return rep;
}

}  // namespace sgmc
