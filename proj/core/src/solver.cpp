#include "sgmc/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "sgmc/functionals.hpp"

namespace sgmc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Workspace::Workspace(const SimConfig& cfg)
    : cfg_(cfg),
      m_(cfg.resolved_mode_cutoff()),
      n_(grid_size_for(cfg.resolved_mode_cutoff())),
      dt_(cfg.resolved_dt()),
      theta_(placement_theta(cfg.placement)),
      eps_pref_(cfg.epsilon > 0.0 ? std::pow(cfg.epsilon, 0.75) : 1.0),
      transform_(m_, n_),
      scratch_grid(n_),
      scratch_grid2(n_) {
  cfg_.validate();
  heat_dt_.resize(m_);
  heat_theta_.resize(m_);
  for (int n = 1; n <= m_; ++n) {
    const double lam = kTwoPi * wavenumber(n);
    heat_dt_[n - 1] = std::exp(-lam * lam * dt_);
    heat_theta_[n - 1] = std::exp(-lam * lam * theta_ * dt_);
  }
  basis_rows_.resize(16);
}

void Workspace::make_noise(const BrownianIncrements& inc) {
  if (inc.mode_cutoff() != m_)
    throw std::invalid_argument("make_noise: increment cutoff mismatch");
  if (cfg_.is_limit())
    make_white_noise(inc, transform_, noise_);
  else
    make_mollified_noise(inc, cfg_.epsilon, transform_, noise_);
}

void Workspace::heat_step(SpectralField& y) const {
  for (int i = 0; i < m_; ++i) y.coeffs[i] *= heat_dt_[i];
}

void Workspace::add_placed(SpectralField& y, const SpectralField& v) const {
  for (int i = 0; i < m_; ++i) y.coeffs[i] += heat_theta_[i] * v.coeffs[i];
}

SpectralField Workspace::sample_initial(const InitialCondition& psi) const {
  GridField grid(n_);
  for (int i = 0; i < n_; ++i) grid.values[i] = psi.eval(double(i) / n_);
  return transform_.analyze(grid);
}

const std::vector<double>& Workspace::basis_row(int n) const {
  if (n >= int(basis_rows_.size())) basis_rows_.resize(n + 1);
  auto& row = basis_rows_[n];
  if (row.empty()) {
    row.resize(n_);
    for (int i = 0; i < n_; ++i) row[i] = basis_value(n, double(i) / n_);
  }
  return row;
}

SpectralField step_mollified(const SpectralField& u, Workspace& ws) {
  if (ws.cfg().is_limit())
    throw std::invalid_argument("step_mollified: config selects the limit equation");
  ws.transform().synthesize(u, ws.scratch_grid);
  const auto& g = ws.cfg().g;
  const auto& kernel = ws.noise().kernel_grid;
  const double pref = ws.eps_prefactor();
  for (int i = 0; i < ws.grid_size(); ++i)
    ws.scratch_grid2.values[i] =
        pref * g.g(ws.scratch_grid.values[i]) * kernel.values[i];
  ws.transform().analyze(ws.scratch_grid2, ws.scratch_field);
  SpectralField out = u;
  ws.heat_step(out);
  ws.add_placed(out, ws.scratch_field);
  return out;
}

SpectralField step_limit(const SpectralField& u, Workspace& ws) {
  if (!ws.cfg().is_limit())
    throw std::invalid_argument("step_limit: config has epsilon > 0");
  ws.transform().synthesize(u, ws.scratch_grid);
  const auto& g = ws.cfg().g;
  const auto& kernel = ws.noise().kernel_grid;
  const double coef = ws.cfg().coefficient;
  for (int i = 0; i < ws.grid_size(); ++i)
    ws.scratch_grid2.values[i] =
        coef * g.gprime_g(ws.scratch_grid.values[i]) * kernel.values[i];
  ws.transform().analyze(ws.scratch_grid2, ws.scratch_field);
  SpectralField out = u;
  ws.heat_step(out);
  ws.add_placed(out, ws.scratch_field);
  return out;
}

SpectralField step_mollified(const SpectralField& u, const BrownianIncrements& inc,
                             const SimConfig& cfg) {
  Workspace ws(cfg);
  ws.make_noise(inc);
  return step_mollified(u, ws);
}

SpectralField step_limit(const SpectralField& u, const BrownianIncrements& inc,
                         const SimConfig& cfg) {
  Workspace ws(cfg);
  ws.make_noise(inc);
  return step_limit(u, ws);
}

int Trajectory::step_of_time(double t) const {
  const double h = cfg.resolved_dt();
  const int i = int(std::llround(t / h));
  if (std::fabs(i * h - t) > 1e-9)
    throw std::invalid_argument("time does not lie on the step grid");
  return i;
}

Trajectory solve_path(const SimConfig& cfg, std::uint64_t path_index,
                      const RecordOptions& opts) {
  Workspace ws(cfg);
  return solve_path(ws, path_index, opts);
}

Trajectory solve_path(Workspace& ws, std::uint64_t path_index,
                      const RecordOptions& opts) {
  const SimConfig& cfg = ws.cfg();
  const int m = ws.mode_cutoff();
  const double h = ws.dt();
  const int nsteps = cfg.steps();
  const bool limit = cfg.is_limit();
  const bool want_beta = opts.beta_hi >= opts.beta_lo && opts.beta_lo >= 1;
  const bool want_x = opts.record_x || want_beta;
  if (limit && want_x)
    throw std::invalid_argument("solve_path: X/beta channels need epsilon > 0");

  Trajectory traj;
  traj.cfg = cfg;
  traj.path_index = path_index;
  traj.config_hash = cfg.hash();

  std::vector<int> save_steps;
  for (double t : cfg.save_times) {
    const int i = int(std::llround(t / h));
    if (std::fabs(i * h - t) > 1e-9)
      throw std::invalid_argument("save_times must lie on the step grid");
    save_steps.push_back(i);
  }
  int dense_lo = -1, dense_hi = -2;
  if (opts.dense_from >= 0.0 && opts.dense_to > opts.dense_from) {
    dense_lo = int(std::llround(opts.dense_from / h));
    dense_hi = int(std::llround(opts.dense_to / h));
    traj.dense_first_step = dense_lo;
    traj.dense_stride = std::max(1, opts.dense_stride);
  }

  SpectralField u = ws.sample_initial(cfg.psi);
  SpectralField x(m);
  BetaState beta;
  if (want_beta) beta = BetaState(opts.beta_lo, opts.beta_hi);
  if (want_beta) {
    traj.beta.n_lo = opts.beta_lo;
    traj.beta.n_hi = opts.beta_hi;
    traj.beta.stride = opts.beta_stride;
    traj.beta.series.assign(opts.beta_hi - opts.beta_lo + 1, {});
  }

  RngStream stream{cfg.master_seed, path_index, 0};
  auto record_at = [&](int i) {
    for (std::size_t s = 0; s < save_steps.size(); ++s) {
      if (save_steps[s] == i) {
        traj.save_times.push_back(cfg.save_times[s]);
        traj.u.push_back(u);
        if (opts.record_x) traj.x.push_back(x);
      }
    }
    if (i >= dense_lo && i <= dense_hi && (i - dense_lo) % traj.dense_stride == 0) {
      traj.u_steps.push_back(u);
      if (want_x) traj.x_steps.push_back(x);
    }
    if (want_beta && i % opts.beta_stride == 0) {
      traj.beta.times.push_back(i * h);
      for (int n = opts.beta_lo; n <= opts.beta_hi; ++n)
        traj.beta.series[n - opts.beta_lo].push_back(beta.value(n));
    }
  };

  for (int i = 0; i < nsteps; ++i) {
    record_at(i);
    const BrownianIncrements inc = sample_increments(stream, m, h);
    ws.make_noise(inc);
    if (want_beta) {
      ws.transform().synthesize(x, ws.scratch_grid);
      beta_step(beta, ws.scratch_grid, ws);
    }
    if (want_x) evolve_convolution_step(x, ws);
    u = limit ? step_limit(u, ws) : step_mollified(u, ws);
  }
  record_at(nsteps);
  return traj;
}

}  // namespace sgmc
