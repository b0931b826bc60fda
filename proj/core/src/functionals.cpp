#include "sgmc/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace sgmc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

void evolve_convolution_step(SpectralField& x, Workspace& ws) {
  if (ws.cfg().is_limit())
    throw std::invalid_argument("evolve_convolution_step: needs epsilon > 0");
  const double pref = ws.eps_prefactor();
  SpectralField v = ws.noise().kernel_spec;
  for (double& c : v.coeffs) c *= pref;
  ws.heat_step(x);
  ws.add_placed(x, v);
}

SpectralField evolve_convolution(const SpectralField& x, const BrownianIncrements& inc,
                                 double eps, double dt, SemigroupPlacement placement) {
  SimConfig cfg;
  cfg.epsilon = eps;
  cfg.mode_cutoff = x.mode_cutoff();
  cfg.dt = dt;
  cfg.t_end = 1.0;
  cfg.placement = placement;
  Workspace ws(cfg);
  ws.make_noise(inc);
  SpectralField out = x;
  evolve_convolution_step(out, ws);
  return out;
}

double k_increment(const GridField& f, Workspace& ws) {
  if (ws.cfg().is_limit())
    throw std::invalid_argument("k_increment: needs epsilon > 0");
  if (f.size() != ws.grid_size())
    throw std::invalid_argument("k_increment: grid size mismatch");
  const auto& kernel = ws.noise().kernel_grid;
  double acc = 0.0;
  for (int i = 0; i < f.size(); ++i) acc += f.values[i] * kernel.values[i];
  return ws.eps_prefactor() * acc / double(f.size());
}

void beta_step(BetaState& beta, const GridField& x_grid, Workspace& ws) {
  GridField f(ws.grid_size());
  for (int n = beta.n_lo; n <= beta.n_hi; ++n) {
    const auto& row = ws.basis_row(n);
    for (int i = 0; i < ws.grid_size(); ++i) f.values[i] = row[i] * x_grid.values[i];
    beta.values[n - beta.n_lo] += k_increment(f, ws);
  }
}

void JIntegrator::step(const GridField& f, Workspace& ws) {
  if (f.size() != ws.grid_size())
    throw std::invalid_argument("JIntegrator: grid size mismatch");
  const auto& kernel = ws.noise().kernel_grid;
  const double pref = ws.eps_prefactor();
  for (int i = 0; i < f.size(); ++i)
    ws.scratch_grid2.values[i] = pref * f.values[i] * kernel.values[i];
  ws.transform().analyze(ws.scratch_grid2, ws.scratch_field);
  ws.heat_step(y_);
  ws.add_placed(y_, ws.scratch_field);
}

double martingale_increment(const Trajectory& traj, const SpectralField& phi,
                            double s, double t) {
  const double h = traj.cfg.resolved_dt();
  if (h > (t - s) / 10.0)
    throw std::invalid_argument("martingale_increment: insufficient resolution, "
                                "need dt <= (t-s)/10");
  const int i_s = traj.step_of_time(s);
  const int i_t = traj.step_of_time(t);
  if (traj.dense_first_step < 0 || traj.dense_stride != 1 ||
      i_s < traj.dense_first_step ||
      i_t >= traj.dense_first_step + int(traj.u_steps.size()))
    throw std::invalid_argument("martingale_increment: dense record must cover [s, t]");

  const int m = phi.mode_cutoff();
  std::vector<double> lap_phi(m);
  for (int n = 1; n <= m; ++n) {
    const double lam = kTwoPi * wavenumber(n);
    lap_phi[n - 1] = -lam * lam * phi[n];
  }
  auto u_at = [&](int i) -> const SpectralField& {
    return traj.u_steps[i - traj.dense_first_step];
  };
  auto drift = [&](int i) {
    const SpectralField& u = u_at(i);
    double acc = 0.0;
    for (int n = 1; n <= m; ++n) acc += u[n] * lap_phi[n - 1];
    return acc;
  };
  double quad = 0.0;
  for (int i = i_s; i < i_t; ++i) quad += 0.5 * h * (drift(i) + drift(i + 1));
  double bdry = 0.0;
  for (int n = 1; n <= m; ++n) bdry += (u_at(i_t)[n] - u_at(i_s)[n]) * phi[n];
  return bdry - quad;
}

Decomposition decompose_increment(const Trajectory& traj, const SpectralField& phi,
                                  double s, double t, Workspace& ws) {
  const SimConfig& cfg = traj.cfg;
  if (cfg.is_limit())
    throw std::invalid_argument("decompose_increment: needs epsilon > 0");
  const double h = ws.dt();
  const int m = ws.mode_cutoff();
  const int ngrid = ws.grid_size();
  const int i_s = traj.step_of_time(s);
  const int i_t = traj.step_of_time(t);
  if (traj.dense_first_step < 0 || traj.dense_stride != 1 ||
      i_s < traj.dense_first_step ||
      i_t > traj.dense_first_step + int(traj.u_steps.size()) - 1 ||
      traj.x_steps.size() != traj.u_steps.size())
    throw std::invalid_argument("decompose_increment: dense u/X record must cover [s, t]");

  const auto& tr = ws.transform();
  GridField phig = tr.synthesize(phi);

  // frozen states at s and their running heat flows
  SpectralField pu = traj.u_steps[i_s - traj.dense_first_step];
  SpectralField px = traj.x_steps[i_s - traj.dense_first_step];
  JIntegrator j_frozen(m);  // J_{s,.}[g(P_{diamond-s} u_s)]
  JIntegrator j_one(m);     // J_{s,.}[1]

  GridField ug(ngrid), xg(ngrid), pug(ngrid), pxg(ngrid), jfg(ngrid), jog(ngrid);
  GridField q(ngrid), ones(ngrid);
  for (int i = 0; i < ngrid; ++i) ones.values[i] = 1.0;

  Decomposition out;
  RngStream stream{cfg.master_seed, traj.path_index, std::uint64_t(i_s)};
  const auto& g = cfg.g;

  for (int i = i_s; i < i_t; ++i) {
    const BrownianIncrements inc = sample_increments(stream, m, h);
    ws.make_noise(inc);

    const SpectralField& u = traj.u_steps[i - traj.dense_first_step];
    const SpectralField& x = traj.x_steps[i - traj.dense_first_step];
    tr.synthesize(u, ug);
    tr.synthesize(x, xg);
    tr.synthesize(pu, pug);
    tr.synthesize(px, pxg);
    tr.synthesize(j_frozen.value(), jfg);
    tr.synthesize(j_one.value(), jog);

    // 1: phi g'g(P u_s) X
    for (int p = 0; p < ngrid; ++p)
      q.values[p] = phig.values[p] * g.gprime_g(pug.values[p]) * xg.values[p];
    out.terms[0] += k_increment(q, ws);
    // 2: phi g(P u_s)
    for (int p = 0; p < ngrid; ++p)
      q.values[p] = phig.values[p] * g.g(pug.values[p]);
    out.terms[1] += k_increment(q, ws);
    // 3: - phi g'g(P u_s) (P_{.-s} X_s)
    for (int p = 0; p < ngrid; ++p)
      q.values[p] = -phig.values[p] * g.gprime_g(pug.values[p]) * pxg.values[p];
    out.terms[2] += k_increment(q, ws);
    // 4: phi g'(P u_s) (J_{s,.}[g(P_{d-s} u_s)] - g(P u_s) J_{s,.}[1])
    for (int p = 0; p < ngrid; ++p)
      q.values[p] = phig.values[p] * g.gprime(pug.values[p]) *
                    (jfg.values[p] - g.g(pug.values[p]) * jog.values[p]);
    out.terms[3] += k_increment(q, ws);
    // 5: phi g'(P u_s) J_{s,.}[g(u) - g(P_{d-s} u_s)]
    //    = phi g'(P u_s) ((u - P u_s) - J_{s,.}[g(P_{d-s} u_s)])
    for (int p = 0; p < ngrid; ++p)
      q.values[p] = phig.values[p] * g.gprime(pug.values[p]) *
                    (ug.values[p] - pug.values[p] - jfg.values[p]);
    out.terms[4] += k_increment(q, ws);
    // 6: phi (G_{s,.}[u] - g'(P u_s)) (u - P u_s)
    for (int p = 0; p < ngrid; ++p) {
      const double G = averaged_derivative_value(ug.values[p], pug.values[p], g);
      q.values[p] = phig.values[p] * (G - g.gprime(pug.values[p])) *
                    (ug.values[p] - pug.values[p]);
    }
    out.terms[5] += k_increment(q, ws);
    // direct: phi g(u)
    for (int p = 0; p < ngrid; ++p)
      q.values[p] = phig.values[p] * g.g(ug.values[p]);
    out.k_direct += k_increment(q, ws);

    // advance the frozen channels with the same noise
    ws.heat_step(pu);
    ws.heat_step(px);
    for (int p = 0; p < ngrid; ++p) q.values[p] = g.g(pug.values[p]);
    j_frozen.step(q, ws);
    j_one.step(ones, ws);
  }
  return out;
}

}  // namespace sgmc
