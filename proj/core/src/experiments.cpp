#include "sgmc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "sgmc/constants.hpp"
#include "sgmc/functionals.hpp"
#include "sgmc/noise.hpp"
#include "sgmc/parallel.hpp"
#include "sgmc/sewing.hpp"
#include "sgmc/solver.hpp"
#include "sgmc/stats.hpp"

namespace sgmc {

using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

std::string fnum(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> as_doubles(const json& a) {
  std::vector<double> out;
  for (const auto& v : a) out.push_back(v.get<double>());
  return out;
}

Nonlinearity g_from(const json& cfg) {
  return Nonlinearity::parse(cfg.at("g").get<std::string>(),
                             cfg.value("g_param", 1.0));
}

// largest step <= eps^2/10 that divides the horizon exactly
double fitted_dt(double eps, double t_end) {
  const double raw = default_dt(eps);
  const double steps = std::ceil(t_end / raw - 1e-12);
  return t_end / steps;
}

// ----------------------------------------------------------------- constants

SuiteResult constants_suite(const json&) {
  SuiteResult res;
  res.name = "constants";
  for (const auto& row : constant_report()) {
    ResultRow r;
    r.suite = res.name;
    r.params = "name=" + row.name;
    r.estimate = row.closed_form;
    r.ci = 0.0;
    r.target = row.oracle;
    r.tolerance = row.tolerance;
    r.pass = row.pass;
    res.add(r);
  }
  return res;
}

// ----------------------------------------------------------------- heat-check

SuiteResult heat_check_suite(const json& cfg) {
  SuiteResult res;
  res.name = "heat-check";
  const double lead_const = 3.0 / (32.0 * std::sqrt(2.0 * M_PI));

  // leading-order accuracy at t = 1e-4
  {
    const double t = 1e-4;
    const double direct = heat_deriv_l2norm_sq(2, t);
    const double lead = lead_const * std::pow(t, -2.5);
    res.add_check("check=grad2_leading;t=1e-4", std::fabs(direct / lead - 1.0), 0.0,
                  0.0, 0.02);
  }
  // slope of the relative asymptotic error over the t grid
  {
    const auto ts = as_doubles(cfg.at("t_grid"));
    std::vector<double> errs;
    for (double t : ts) {
      const double direct = heat_deriv_l2norm_sq(2, t);
      const double lead = lead_const * std::pow(t, -2.5);
      errs.push_back(std::max(std::fabs(direct / lead - 1.0), 2.3e-16));
    }
    const SlopeFit fit = loglog_slope(ts, errs);
    ResultRow r;
    r.suite = res.name;
    r.params = "check=grad2_error_slope";
    r.estimate = fit.slope;
    r.ci = fit.ci_halfwidth;
    r.target = 0.5;
    r.tolerance = 0.1;
    r.pass = std::fabs(fit.slope - 0.5) <= 0.1;
    res.add(r);
    for (std::size_t i = 0; i < ts.size(); ++i)
      res.add_info(fmt("check=grad2_rel_error;t=%g", ts[i]), errs[i]);
  }
  // |direct - leading| t^2 bounded on the grid
  {
    double worst = 0.0;
    for (double t : as_doubles(cfg.at("t_grid")))
      worst = std::max(worst, heat_norm_asymptotic_error(t));
    res.add_check("check=asymptotic_error_times_t2_bounded", worst, 0.0, 0.0, 0.01);
  }
  // j = 1 squared-norm scaling exponent -3/2
  {
    const std::vector<double> ts = {1e-3, 1e-4, 1e-5};
    std::vector<double> vals;
    for (double t : ts) vals.push_back(heat_deriv_l2norm_sq(1, t));
    const SlopeFit fit = loglog_slope(ts, vals);
    ResultRow r;
    r.suite = res.name;
    r.params = "check=grad1_scaling_slope";
    r.estimate = fit.slope;
    r.ci = fit.ci_halfwidth;
    r.target = -1.5;
    r.tolerance = 0.05;
    r.pass = std::fabs(fit.slope + 1.5) <= 0.05;
    res.add(r);
  }
  // j = 0 equilibration
  res.add_check("check=grad0_equilibration;t=10", heat_deriv_l2norm_sq(0, 10.0), 0.0,
                1.0, 1e-12);
  // kernel mass conservation by grid quadrature
  for (double t : {1e-3, 1e-1, 1.0}) {
    const int n = 4096;
    double mass = 0.0;
    for (int i = 0; i < n; ++i) mass += heat_kernel_value(t, double(i) / n);
    res.add_check(fmt("check=kernel_mass;t=%g", t), mass / n, 0.0, 1.0, 1e-12);
  }
  // equilibration of the kernel itself
  res.add_check("check=kernel_flat;t=10;x=0.3", heat_kernel_value(10.0, 0.3), 0.0,
                1.0, 1e-12);
  // short-time peak and the spectral cross-check
  res.add_check("check=kernel_peak;t=1e-4", heat_kernel_value(1e-4, 0.0), 0.0,
                1.0 / std::sqrt(4.0 * M_PI * 1e-4), 1e-10);
  {
    const double t = 1e-3, x = 0.3;
    double spectral = 1.0;
    for (int k = 1; k < 2000; ++k) {
      const double term = 2.0 * std::exp(-4.0 * M_PI * M_PI * k * k * t) *
                          std::cos(2.0 * M_PI * k * x);
      spectral += term;
      if (std::fabs(term) < 1e-18) break;
    }
    res.add_check("check=kernel_spectral_route;t=1e-3;x=0.3",
                  heat_kernel_value(t, x), 0.0, spectral, 1e-10);
  }
  return res;
}

// --------------------------------------------------------------- blowup-curve

SuiteResult blowup_suite(const json& cfg) {
  SuiteResult res;
  res.name = "blowup-curve";
  const auto eps = as_doubles(cfg.at("eps_grid"));

  for (double gamma : {0.0, 0.25, 0.5})
    for (double e : eps)
      res.add_info(fmt("gamma=%g;eps=%g", gamma, e), variance_blowup(gamma, e));

  {
    std::vector<double> vals;
    for (double e : eps) vals.push_back(variance_blowup(0.5, e));
    const SlopeFit fit = loglog_slope(eps, vals);
    ResultRow r;
    r.suite = res.name;
    r.params = "check=gamma_half_slope";
    r.estimate = fit.slope;
    r.ci = fit.ci_halfwidth;
    r.target = -1.0;
    r.tolerance = 0.1;
    r.pass = std::fabs(fit.slope + 1.0) <= 0.1;
    res.add(r);
  }
  {
    double lo = 1e300, hi = 0.0;
    for (double e : eps) {
      const double v = variance_blowup(0.0, e);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    res.add_check("check=gamma_zero_stability", hi / lo - 1.0, 0.0, 0.0, 0.05);
  }
  {
    std::vector<double> vals;
    for (double e : eps) vals.push_back(variance_blowup(0.25, e));
    // eps descending or ascending: sort descending so diffs go toward eps -> 0
    std::vector<double> order = eps;
    std::vector<std::size_t> idx(eps.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return order[a] > order[b]; });
    std::vector<double> diffs;
    for (std::size_t i = 1; i < idx.size(); ++i)
      diffs.push_back(vals[idx[i]] - vals[idx[i - 1]]);
    double lo = 1e300, hi = -1e300;
    for (double d : diffs) {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    const double spread = (hi - lo) / std::max(std::fabs((lo + hi) / 2), 1e-300);
    res.add_check("check=gamma_quarter_log_steps", spread, 0.0, 0.0, 0.10);
  }
  return res;
}

// ----------------------------------------------------------------- beta-stats

struct BetaRunOutput {
  // increments beta^n(t1) - beta^n(t0), indexed [n - n_lo][path]
  std::vector<std::vector<double>> incr;
};

BetaRunOutput run_beta_paths(double eps, int n_lo, int n_hi, std::uint64_t paths,
                             std::uint64_t seed, double t0, double t1) {
  SimConfig cfg;
  cfg.epsilon = eps;
  cfg.t_end = t1;
  cfg.g = Nonlinearity::zero();
  cfg.psi = InitialCondition::constant(0.0);
  cfg.master_seed = seed;
  cfg.validate();
  const int m = cfg.resolved_mode_cutoff();
  const double h = cfg.resolved_dt();
  const int nsteps = cfg.steps();
  const int step_t0 = int(std::llround(t0 / h));

  BetaRunOutput out;
  out.incr.assign(n_hi - n_lo + 1, std::vector<double>(paths, 0.0));

  parallel_paths(paths, [&](std::uint64_t lo, std::uint64_t hi) {
    Workspace ws(cfg);
    GridField xg(ws.grid_size());
    for (std::uint64_t p = lo; p < hi; ++p) {
      SpectralField x(m);
      BetaState beta(n_lo, n_hi);
      std::vector<double> beta0(n_hi - n_lo + 1, 0.0);
      RngStream stream{cfg.master_seed, p, 0};
      for (int i = 0; i < nsteps; ++i) {
        if (i == step_t0) beta0 = beta.values;
        const BrownianIncrements inc = sample_increments(stream, m, h);
        ws.make_noise(inc);
        ws.transform().synthesize(x, xg);
        beta_step(beta, xg, ws);
        evolve_convolution_step(x, ws);
      }
      for (int n = n_lo; n <= n_hi; ++n)
        out.incr[n - n_lo][p] = beta.value(n) - beta0[n - n_lo];
    }
  });
  return out;
}

SuiteResult beta_stats_suite(const json& cfg) {
  SuiteResult res;
  res.name = "beta-stats";
  const auto eps_grid = as_doubles(cfg.at("eps_grid"));
  const int n_lo = cfg.at("n_lo"), n_hi = cfg.at("n_hi");
  const int check_n_hi = cfg.at("check_n_hi");
  const std::uint64_t paths = cfg.at("paths").get<std::uint64_t>();
  const std::uint64_t seed = cfg.at("master_seed").get<std::uint64_t>();
  const double t0 = cfg.at("t0"), t1 = cfg.at("t1");
  const double flagship_eps = cfg.at("flagship_eps");
  const double tol = cfg.at("tolerance");
  const double span = t1 - t0;
  const double target = c0();

  std::vector<double> mean_abs_dev;
  for (double eps : eps_grid) {
    const BetaRunOutput run = run_beta_paths(eps, n_lo, n_hi, paths, seed, t0, t1);
    const bool flagship = std::fabs(eps - flagship_eps) < 1e-12;
    double dev_acc = 0.0;
    int dev_cnt = 0;
    for (int n = n_lo; n <= n_hi; ++n) {
      MCStats st;
      for (std::uint64_t p = 0; p < paths; ++p) st.add(run.incr[n - n_lo][p], p);
      const double var_rate = st.variance() / span;
      const double ci = st.variance_ci_halfwidth() / span;
      const bool checked = flagship && n >= n_lo && n <= check_n_hi;
      ResultRow r;
      r.suite = res.name;
      r.params = fmt("check=beta_variance_rate;eps=%g;n=%d", eps, n);
      r.estimate = var_rate;
      r.ci = ci;
      r.target = target;
      r.tolerance = checked ? tol : kNaN;
      r.informational = !checked;
      r.pass = !checked || std::fabs(var_rate / target - 1.0) <= tol;
      res.add(r);
      if (n <= check_n_hi) {
        dev_acc += std::fabs(var_rate / target - 1.0);
        ++dev_cnt;
      }
      // martingale mean-zero check (informational)
      res.add_info(fmt("check=beta_mean;eps=%g;n=%d", eps, n), st.mean(),
                   st.ci_halfwidth());
    }
    mean_abs_dev.push_back(dev_acc / dev_cnt);

    if (flagship && paths >= 100) {
      // independence across modes
      const double corr_tol = 4.0 / std::sqrt(double(paths));
      double worst = 0.0;
      int wn = 0, wm = 0;
      for (int n = n_lo; n <= n_hi; ++n) {
        for (int m2 = n + 1; m2 <= n_hi; ++m2) {
          const auto& a = run.incr[n - n_lo];
          const auto& b = run.incr[m2 - n_lo];
          const ValueWithCI cv = empirical_cov(a, b);
          MCStats sa, sb;
          for (std::uint64_t p = 0; p < paths; ++p) {
            sa.add(a[p], p);
            sb.add(b[p], p);
          }
          const double corr = cv.value / std::sqrt(sa.variance() * sb.variance());
          if (std::fabs(corr) > std::fabs(worst)) {
            worst = corr;
            wn = n;
            wm = m2;
          }
        }
      }
      ResultRow r;
      r.suite = res.name;
      r.params = fmt("check=beta_max_cross_correlation;eps=%g;pair=%d-%d", eps, wn, wm);
      r.estimate = worst;
      r.ci = 1.0 / std::sqrt(double(paths));
      r.target = 0.0;
      r.tolerance = corr_tol;
      r.pass = std::fabs(worst) < corr_tol;
      res.add(r);
    }
  }

  // deviation shrinks with eps; fitted slope target window [0.3, 0.8]
  if (eps_grid.size() >= 3) {
    const SlopeFit fit = loglog_slope(eps_grid, mean_abs_dev);
    ResultRow r;
    r.suite = res.name;
    r.params = "check=deviation_slope_vs_eps";
    r.estimate = fit.slope;
    r.ci = fit.ci_halfwidth;
    r.target = 0.55;
    r.tolerance = 0.25;
    r.pass = fit.slope >= 0.3 && fit.slope <= 0.8;
    res.add(r);
  }
  return res;
}

// ------------------------------------------------------------------- simulate

SuiteResult simulate_suite(const json& cfg) {
  SuiteResult res;
  res.name = "simulate";
  SimConfig sim;
  sim.epsilon = cfg.at("epsilon");
  sim.t_end = cfg.at("t_end");
  sim.g = g_from(cfg);
  sim.psi = InitialCondition::parse(cfg.at("psi").get<std::string>(),
                                    cfg.value("psi_amplitude", 1.0),
                                    cfg.value("psi_index", 1));
  sim.placement = parse_placement(cfg.value("placement", std::string("half")));
  sim.master_seed = cfg.at("master_seed").get<std::uint64_t>();
  if (cfg.contains("coefficient") && cfg.at("coefficient").get<double>() > 0.0)
    sim.coefficient = cfg.at("coefficient");
  for (const auto& t : cfg.at("save_times")) sim.save_times.push_back(t.get<double>());
  sim.validate();

  const std::uint64_t path = cfg.value("path_index", 0);
  const Trajectory traj = solve_path(sim, path);

  // trajectory CSV: one row per (time, mode)
  std::string body = "t,mode,coefficient\n";
  for (std::size_t s = 0; s < traj.save_times.size(); ++s)
    for (int n = 1; n <= traj.u[s].mode_cutoff(); ++n)
      body += fnum(traj.save_times[s]) + "," + std::to_string(n) + "," +
              fnum(traj.u[s][n]) + "\n";
  res.extra_files.emplace_back("trajectory.csv", body);

  res.add_info(fmt("config_hash=%016llx;path=%llu",
                   (unsigned long long)traj.config_hash, (unsigned long long)path),
               double(traj.save_times.size()));

  if (sim.g.family == Nonlinearity::Family::zero) {
    // noise term vanishes: the path must be the pure heat flow
    const SpectralField psi0 = Workspace(sim).sample_initial(sim.psi);
    double worst = 0.0;
    for (std::size_t s = 0; s < traj.save_times.size(); ++s) {
      const SpectralField ref = apply_heat(psi0, traj.save_times[s]);
      for (int n = 1; n <= ref.mode_cutoff(); ++n)
        worst = std::max(worst, std::fabs(ref[n] - traj.u[s][n]));
    }
    res.add_check("check=deterministic_heat_flow", worst, 0.0, 0.0, 1e-12);
  }
  return res;
}

// ------------------------------------------------------------------- converge

std::vector<double> endpoint_samples(const SimConfig& proto, std::uint64_t paths,
                                     double x0) {
  std::vector<double> out(paths, 0.0);
  parallel_paths(paths, [&](std::uint64_t lo, std::uint64_t hi) {
    Workspace ws(proto);
    RecordOptions opts;  // snapshots via save_times = {t_end}
    for (std::uint64_t p = lo; p < hi; ++p) {
      const Trajectory traj = solve_path(ws, p, opts);
      out[p] = synthesize(traj.u.back(), x0);
    }
  });
  return out;
}

SuiteResult converge_suite(const json& cfg) {
  SuiteResult res;
  res.name = "converge";
  const auto eps_grid = as_doubles(cfg.at("eps_grid"));
  const std::uint64_t paths = cfg.at("paths").get<std::uint64_t>();
  const std::uint64_t seed = cfg.at("master_seed").get<std::uint64_t>();
  const double T = cfg.at("T"), x0 = cfg.at("x0");
  const double psi_value = cfg.at("psi_value");
  const Nonlinearity g = g_from(cfg);
  const double ks_tol = cfg.at("ks_tolerance");
  const double mom_tol = cfg.at("moment_tolerance");
  const double var_match_tol = cfg.at("var_match_tolerance");
  const double var_discrim = cfg.at("var_discrim_threshold");

  SimConfig base;
  base.t_end = T;
  base.save_times = {T};
  base.g = g;
  base.psi = InitialCondition::constant(psi_value);

  // limit-equation samples for both coefficient candidates
  SimConfig lim = base;
  lim.epsilon = 0.0;
  lim.mode_cutoff = cfg.at("limit_mode_cutoff");
  lim.dt = cfg.at("limit_dt");
  lim.coefficient = default_limit_coefficient();
  lim.master_seed = seed + 100;
  const std::vector<double> lim_right = endpoint_samples(lim, paths, x0);
  lim.coefficient = 2.0 * default_limit_coefficient();  // (4 pi^{1/4})^{-1}
  lim.master_seed = seed + 101;
  const std::vector<double> lim_wrong = endpoint_samples(lim, paths, x0);

  double prev_ks = kNaN;
  std::vector<double> last_moll;
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    SimConfig moll = base;
    moll.epsilon = eps_grid[i];
    moll.dt = fitted_dt(eps_grid[i], T);
    moll.master_seed = seed + i;
    const std::vector<double> samples = endpoint_samples(moll, paths, x0);
    const KsResult ks = ks_two_sample(samples, lim_right);
    res.add_info(fmt("check=ks_statistic;eps=%g", eps_grid[i]), ks.statistic,
                 ks.p_value);
    if (!std::isnan(prev_ks)) {
      ResultRow r;
      r.suite = res.name;
      r.params = fmt("check=ks_non_increasing;eps=%g", eps_grid[i]);
      r.estimate = ks.statistic - prev_ks;
      r.ci = ks_tol;
      r.target = 0.0;
      r.tolerance = ks_tol;
      r.pass = ks.statistic <= prev_ks + ks_tol;
      res.add(r);
    }
    prev_ks = ks.statistic;
    if (i + 1 == eps_grid.size()) last_moll = samples;
  }

  // raw moment match at the smallest eps
  MCStats moll_st, lim_st, wrong_st;
  for (std::uint64_t p = 0; p < paths; ++p) {
    moll_st.add(last_moll[p], p);
    lim_st.add(lim_right[p], p);
    wrong_st.add(lim_wrong[p], p);
  }
  res.add_check("check=mean_match", std::fabs(moll_st.mean() / lim_st.mean() - 1.0),
                0.0, 0.0, mom_tol);
  res.add_check("check=second_moment_match",
                std::fabs(moll_st.power_mean(2) / lim_st.power_mean(2) - 1.0), 0.0,
                0.0, mom_tol);

  // coefficient discrimination on the centered variance
  const double vm = moll_st.variance();
  res.add_info("check=variance_mollified", vm, moll_st.variance_ci_halfwidth());
  res.add_info("check=variance_limit_8pi4", lim_st.variance(),
               lim_st.variance_ci_halfwidth());
  res.add_info("check=variance_limit_4pi4", wrong_st.variance(),
               wrong_st.variance_ci_halfwidth());
  res.add_check("check=variance_match_8pi4",
                std::fabs(lim_st.variance() / vm - 1.0), 0.0, 0.0, var_match_tol);
  {
    const double rel = std::fabs(wrong_st.variance() / vm - 1.0);
    ResultRow r;
    r.suite = res.name;
    r.params = "check=variance_discriminates_4pi4";
    r.estimate = rel;
    r.target = var_discrim;
    r.tolerance = kNaN;
    r.pass = rel > var_discrim;
    res.add(r);
  }
  return res;
}

// ------------------------------------------------------------------ decompose

struct DecompositionStats {
  std::array<double, 6> l2{};
  double max_identity_resid = 0.0;
};

DecompositionStats run_decomposition(double eps, double s, double t,
                                     const Nonlinearity& g, double psi_value,
                                     int phi_mode, std::uint64_t paths,
                                     std::uint64_t seed) {
  SimConfig cfg;
  cfg.epsilon = eps;
  cfg.t_end = t;
  cfg.g = g;
  cfg.psi = InitialCondition::constant(psi_value);
  cfg.master_seed = seed;
  cfg.validate();

  std::vector<std::array<double, 7>> per_path(paths);
  parallel_paths(paths, [&](std::uint64_t lo, std::uint64_t hi) {
    Workspace ws(cfg);
    SpectralField phi = SpectralField::unit(ws.mode_cutoff(), phi_mode);
    RecordOptions opts;
    opts.record_x = true;
    opts.dense_from = s;
    opts.dense_to = t;
    for (std::uint64_t p = lo; p < hi; ++p) {
      const Trajectory traj = solve_path(ws, p, opts);
      const Decomposition dec = decompose_increment(traj, phi, s, t, ws);
      for (int i = 0; i < 6; ++i) per_path[p][i] = dec.terms[i];
      per_path[p][6] = dec.k_direct;
    }
  });

  DecompositionStats out;
  for (std::uint64_t p = 0; p < paths; ++p) {
    double sum = 0.0;
    for (int i = 0; i < 6; ++i) {
      out.l2[i] += per_path[p][i] * per_path[p][i];
      sum += per_path[p][i];
    }
    const double resid =
        std::fabs(sum - per_path[p][6]) / std::max(std::fabs(per_path[p][6]), 1e-30);
    out.max_identity_resid = std::max(out.max_identity_resid, resid);
  }
  for (int i = 0; i < 6; ++i) out.l2[i] = std::sqrt(out.l2[i] / double(paths));
  return out;
}

SuiteResult decompose_suite(const json& cfg) {
  SuiteResult res;
  res.name = "decompose";
  const Nonlinearity g = g_from(cfg);
  const double psi_value = cfg.at("psi_value");
  const int phi_mode = cfg.at("phi_mode");
  const std::uint64_t paths = cfg.at("paths").get<std::uint64_t>();
  const std::uint64_t seed = cfg.at("master_seed").get<std::uint64_t>();
  const double s = cfg.at("s"), t = cfg.at("t");
  const double identity_tol = cfg.at("identity_tol");

  double worst_resid = 0.0;

  // eps sweep for terms 2-3
  const auto eps_grid = as_doubles(cfg.at("eps_grid"));
  std::vector<double> k2, k3;
  for (double eps : eps_grid) {
    const DecompositionStats st =
        run_decomposition(eps, s, t, g, psi_value, phi_mode, paths, seed);
    worst_resid = std::max(worst_resid, st.max_identity_resid);
    k2.push_back(st.l2[1]);
    k3.push_back(st.l2[2]);
    for (int i = 0; i < 6; ++i)
      res.add_info(fmt("check=term_l2;term=%d;eps=%g;dt_window=%g", i + 1, eps, t - s),
                   st.l2[i]);
  }
  const double slope23_target = cfg.at("slope23_target");
  const double slope23_tol = cfg.at("slope23_tol");
  const std::vector<double>* k23[2] = {&k2, &k3};
  for (int term = 0; term < 2; ++term) {
    const SlopeFit fit = loglog_slope(eps_grid, *k23[term]);
    ResultRow r;
    r.suite = res.name;
    r.params = fmt("check=term%d_slope_vs_eps", term + 2);
    r.estimate = fit.slope;
    r.ci = fit.ci_halfwidth;
    r.target = slope23_target;
    r.tolerance = slope23_tol;
    r.pass = std::fabs(fit.slope - slope23_target) <= slope23_tol;
    res.add(r);
  }

  // (t - s) sweep for terms 4-6
  const auto deltas = as_doubles(cfg.at("delta_grid"));
  const double eps_delta = cfg.at("delta_eps");
  std::array<std::vector<double>, 3> k456;
  for (double d : deltas) {
    const DecompositionStats st =
        run_decomposition(eps_delta, s, s + d, g, psi_value, phi_mode, paths, seed + 7);
    worst_resid = std::max(worst_resid, st.max_identity_resid);
    for (int i = 3; i < 6; ++i) {
      k456[i - 3].push_back(st.l2[i]);
      res.add_info(fmt("check=term_l2;term=%d;eps=%g;dt_window=%g", i + 1, eps_delta, d),
                   st.l2[i]);
    }
  }
  const double slope456_target = cfg.at("slope456_target");
  const double slope456_tol = cfg.at("slope456_tol");
  for (int i = 0; i < 3; ++i) {
    const SlopeFit fit = loglog_slope(deltas, k456[i]);
    ResultRow r;
    r.suite = res.name;
    r.params = fmt("check=term%d_slope_vs_window", i + 4);
    r.estimate = fit.slope;
    r.ci = fit.ci_halfwidth;
    r.target = slope456_target;
    r.tolerance = slope456_tol;
    r.pass = std::fabs(fit.slope - slope456_target) <= slope456_tol;
    res.add(r);
  }

  res.add_check("check=identity_max_relative_residual", worst_resid, 0.0, 0.0,
                identity_tol);
  return res;
}

// --------------------------------------------------------------- sewing-check

SuiteResult sewing_suite(const json& cfg) {
  SuiteResult res;
  res.name = "sewing-check";
  const std::uint64_t seed = cfg.at("master_seed").get<std::uint64_t>();

  // Part A: Ito germ on Brownian paths
  {
    const int max_level = cfg.at("bm_max_level");
    const std::uint64_t paths = cfg.at("bm_paths").get<std::uint64_t>();
    const int pts = (1 << max_level) + 1;
    const double h = 1.0 / double(1 << max_level);
    const double sh = std::sqrt(h);
    std::vector<SewingPathContext> ctxs(paths);
    std::vector<double> targets(paths);
    for (std::uint64_t p = 0; p < paths; ++p) {
      auto& ctx = ctxs[p];
      ctx.max_level = max_level;
      ctx.scalar.resize(pts);
      ctx.scalar[0] = 0.0;
      for (int i = 1; i < pts; ++i)
        ctx.scalar[i] = ctx.scalar[i - 1] + sh * normal_draw(seed, p, i - 1, 0);
      const double w1 = ctx.scalar[pts - 1];
      targets[p] = 0.5 * (w1 * w1 - 1.0);
    }
    const Germ germ = ito_bm_germ();
    std::vector<double> levels, errs;
    std::vector<SewnPath> finest(paths);
    for (int L = 4; L <= max_level; ++L) {
      double sq = 0.0;
      for (std::uint64_t p = 0; p < paths; ++p) {
        const SewnPath sp = sew(germ, ctxs[p], L);
        const double e = sp.values.back() - targets[p];
        sq += e * e;
        if (L == max_level) finest[p] = sp;
      }
      const double l2 = std::sqrt(sq / double(paths));
      levels.push_back(std::pow(2.0, double(-L)));
      errs.push_back(l2);
      res.add_info(fmt("check=ito_germ_l2_error;level=%d", L), l2);
    }
    const SlopeFit fit = loglog_slope(levels, errs);
    // error ~ 2^{-L/2}: slope 1/2 in the mesh size
    ResultRow r;
    r.suite = res.name;
    r.params = "check=ito_germ_error_slope";
    r.estimate = fit.slope;
    r.ci = fit.ci_halfwidth;
    r.target = 0.5;
    r.tolerance = 0.1;
    r.pass = std::fabs(fit.slope - 0.5) <= 0.1;
    res.add(r);

    // characterization: the sewn path passes, a drift-injected one fails
    CharacterizationReport ok = characterization_check(finest, ctxs, germ, 10.0);
    {
      ResultRow r;
      r.suite = res.name;
      r.params = "check=ito_characterization;" + ok.detail;
      r.estimate = ok.ratio_sup;
      r.target = kNaN;
      r.tolerance = 10.0;
      r.pass = ok.pass;
      res.add(r);
    }
    std::vector<SewnPath> drifted = finest;
    for (auto& spn : drifted)
      for (std::size_t i = 0; i < spn.values.size(); ++i)
        spn.values[i] += double(i) / double(spn.values.size() - 1);
    CharacterizationReport bad = characterization_check(drifted, ctxs, germ, 10.0);
    ResultRow r2;
    r2.suite = res.name;
    r2.params = "check=ito_drift_injection_fails;" + bad.detail;
    r2.estimate = bad.mean_sup;
    r2.target = kNaN;
    r2.tolerance = kNaN;
    r2.pass = !bad.pass;
    res.add(r2);
  }

  // Part B: frozen germ on SPDE paths
  {
    const int level = cfg.at("spde_level");
    const int context_level = cfg.at("context_level");
    const std::uint64_t paths = cfg.at("spde_paths").get<std::uint64_t>();
    SimConfig sim;
    sim.epsilon = cfg.at("eps");
    sim.dt = cfg.at("dt");
    sim.t_end = 1.0;
    sim.g = g_from(cfg);
    sim.psi = InitialCondition::constant(cfg.at("psi_value").get<double>());
    sim.master_seed = seed + 900;
    sim.validate();
    const int steps_per_cell =
        int(std::llround(1.0 / ((1 << context_level) * sim.resolved_dt())));

    std::vector<SewingPathContext> ctxs(paths);
    parallel_paths(paths, [&](std::uint64_t lo, std::uint64_t hi) {
      Workspace ws(sim);
      const SpectralField phi =
          SpectralField::unit(ws.mode_cutoff(), cfg.at("phi_mode").get<int>());
      RecordOptions opts;
      opts.record_x = false;
      opts.beta_lo = 2;
      opts.beta_hi = 9;
      opts.beta_stride = steps_per_cell;
      opts.dense_from = 0.0;
      opts.dense_to = 1.0;
      opts.dense_stride = steps_per_cell;
      for (std::uint64_t p = lo; p < hi; ++p) {
        const Trajectory traj = solve_path(ws, p, opts);
        ctxs[p] = make_spde_context(traj, phi, context_level, ws);
      }
    });

    const Germ germ = frozen_spde_germ();
    // level-gap decay of the sewn values at t = 1
    std::vector<std::vector<double>> sewn_at(context_level + 1,
                                             std::vector<double>(paths));
    for (int L = 5; L <= context_level; ++L)
      for (std::uint64_t p = 0; p < paths; ++p)
        sewn_at[L][p] = sew(germ, ctxs[p], L).values.back();
    std::vector<double> gap_l2;
    std::vector<double> gap_levels;
    for (int L = 5; L < context_level; ++L) {
      double sq = 0.0;
      for (std::uint64_t p = 0; p < paths; ++p) {
        const double d = sewn_at[L + 1][p] - sewn_at[L][p];
        sq += d * d;
      }
      const double l2 = std::sqrt(sq / double(paths));
      gap_l2.push_back(l2);
      gap_levels.push_back(std::pow(2.0, double(-L)));
      res.add_info(fmt("check=frozen_germ_level_gap;level=%d", L), l2);
    }
    {
      // remainder rate 2^{-L(beta1 - 1/2)} = 2^{-L/8}, fitted over L = 6..12
      std::vector<double> lv, gv;
      for (std::size_t i = 0; i < gap_l2.size(); ++i) {
        const int L = 5 + int(i);
        if (L >= 6 && L <= 12) {
          lv.push_back(gap_levels[i]);
          gv.push_back(gap_l2[i]);
        }
      }
      const SlopeFit fit = loglog_slope(lv, gv);
      ResultRow r;
      r.suite = res.name;
      r.params = "check=frozen_germ_gap_slope;levels=6-12";
      r.estimate = fit.slope;
      r.ci = fit.ci_halfwidth;
      r.target = 0.125;
      r.tolerance = 0.1;
      r.pass = std::fabs(fit.slope - 0.125) <= 0.1;
      res.add(r);
    }
    {
      // sewn at `level` vs the direct Ito sum (= finest-level evaluation)
      std::vector<double> absdiff(paths);
      for (std::uint64_t p = 0; p < paths; ++p)
        absdiff[p] = std::fabs(sewn_at[level][p] - sewn_at[context_level][p]);
      std::vector<double> gap(paths);
      for (std::uint64_t p = 0; p < paths; ++p)
        gap[p] = std::fabs(sewn_at[level + 1][p] - sewn_at[level][p]);
      std::nth_element(absdiff.begin(), absdiff.begin() + paths / 2, absdiff.end());
      std::nth_element(gap.begin(), gap.begin() + paths / 2, gap.end());
      const double med_diff = absdiff[paths / 2];
      const double tail_factor = 1.0 / (1.0 - std::pow(2.0, -0.125));
      const double bound = gap[paths / 2] * tail_factor;
      res.add_check(fmt("check=frozen_germ_matches_direct;level=%d", level), med_diff,
                    0.0, 0.0, 2.0 * bound);
    }
    {
      // characterization: direct sum passes, drift-injected fails
      std::vector<SewnPath> direct(paths), drifted(paths);
      for (std::uint64_t p = 0; p < paths; ++p) {
        direct[p] = sew(germ, ctxs[p], context_level);
        drifted[p] = direct[p];
        const double scale = 1.0;
        for (std::size_t i = 0; i < drifted[p].values.size(); ++i)
          drifted[p].values[i] += scale * double(i) / double(drifted[p].values.size() - 1);
      }
      CharacterizationReport base = characterization_check(direct, ctxs, germ, 1e300);
      const double tol = 5.0 * std::max(base.ratio_sup, 1e-12);
      CharacterizationReport ok = characterization_check(direct, ctxs, germ, tol);
      ResultRow r;
      r.suite = res.name;
      r.params = "check=frozen_direct_characterization;" + ok.detail;
      r.estimate = ok.ratio_sup;
      r.target = kNaN;
      r.tolerance = tol;
      r.pass = ok.pass;
      res.add(r);
      CharacterizationReport bad = characterization_check(drifted, ctxs, germ, tol);
      ResultRow r2;
      r2.suite = res.name;
      r2.params = "check=frozen_drift_injection_fails;" + bad.detail;
      r2.estimate = bad.mean_sup;
      r2.target = kNaN;
      r2.tolerance = kNaN;
      r2.pass = !bad.pass;
      res.add(r2);
    }
  }
  return res;
}

// --------------------------------------------------------------- holder-norms

SuiteResult holder_suite(const json& cfg) {
  SuiteResult res;
  res.name = "holder-norms";
  const auto eps_grid = as_doubles(cfg.at("eps_grid"));
  const std::uint64_t paths = cfg.at("paths").get<std::uint64_t>();
  const std::uint64_t seed = cfg.at("master_seed").get<std::uint64_t>();
  const Nonlinearity g = g_from(cfg);
  const double alpha = cfg.at("alpha"), p = cfg.at("p");
  const int budget = cfg.at("pair_budget");
  const double s_base = cfg.at("s");
  const double slope_min = cfg.at("slope_min");
  const double stability_factor = cfg.at("stability_factor");

  std::vector<double> norms;
  for (double eps : eps_grid) {
    SimConfig sim;
    sim.epsilon = eps;
    sim.t_end = 1.0;
    sim.g = g;
    sim.psi = InitialCondition::parse(cfg.at("psi").get<std::string>(),
                                      cfg.value("psi_amplitude", 0.5),
                                      cfg.value("psi_index", 12));
    sim.master_seed = seed;
    const double e2 = eps * eps;
    std::vector<double> lags = {e2, 2 * e2, 4 * e2, 8 * e2};
    std::vector<double> times = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    for (double d : lags) times.push_back(s_base + d);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end(),
                            [](double a, double b) { return std::fabs(a - b) < 1e-12; }),
                times.end());
    sim.save_times = times;
    sim.validate();

    std::vector<Trajectory> trajs(paths);
    parallel_paths(paths, [&](std::uint64_t lo, std::uint64_t hi) {
      Workspace ws(sim);
      for (std::uint64_t q = lo; q < hi; ++q) trajs[q] = solve_path(ws, q);
    });

    Workspace ws(sim);
    auto grids_at = [&](double t) {
      std::vector<GridField> out(paths);
      for (std::uint64_t q = 0; q < paths; ++q) {
        const auto& st = trajs[q].save_times;
        std::size_t idx = 0;
        while (idx < st.size() && std::fabs(st[idx] - t) > 1e-12) ++idx;
        if (idx == st.size())
          throw std::logic_error("holder-norms: time not recorded");
        out[q] = ws.transform().synthesize(trajs[q].u[idx]);
      }
      return out;
    };

    // C^{0,alpha}_p norm: sup over save times of (sup-norm + seminorm)
    double norm = 0.0;
    for (double t : {0.1, 0.3, 0.5, 0.7, 1.0}) {
      const std::vector<GridField> fields = grids_at(t);
      const HolderEstimate semi = holder_seminorm(fields, alpha, p, budget);
      // sup-norm part over a coarse x subsample
      double sup = 0.0;
      std::vector<double> vals(paths);
      for (int ix = 0; ix < ws.grid_size(); ix += 8) {
        for (std::uint64_t q = 0; q < paths; ++q) vals[q] = fields[q].values[ix];
        sup = std::max(sup, lp_moment(vals, p).value);
      }
      norm = std::max(norm, sup + semi.value);
    }
    norms.push_back(norm);
    res.add_info(fmt("check=c_alpha_p_norm;eps=%g", eps), norm);

    // increment norms || u_{s+d} - P_d u_s ||_{C^0_p} over one lag decade
    std::vector<double> inc_norms;
    const std::vector<GridField> base_fields = grids_at(s_base);
    std::vector<SpectralField> base_u(paths);
    for (std::uint64_t q = 0; q < paths; ++q) {
      const auto& st = trajs[q].save_times;
      std::size_t idx = 0;
      while (idx < st.size() && std::fabs(st[idx] - s_base) > 1e-12) ++idx;
      base_u[q] = trajs[q].u[idx];
    }
    for (double d : lags) {
      const std::vector<GridField> at = grids_at(s_base + d);
      double sup = 0.0;
      std::vector<double> vals(paths);
      std::vector<GridField> flowed(paths);
      for (std::uint64_t q = 0; q < paths; ++q)
        flowed[q] = ws.transform().synthesize(apply_heat(base_u[q], d));
      for (int ix = 0; ix < ws.grid_size(); ix += 4) {
        for (std::uint64_t q = 0; q < paths; ++q)
          vals[q] = at[q].values[ix] - flowed[q].values[ix];
        sup = std::max(sup, lp_moment(vals, p).value);
      }
      inc_norms.push_back(sup);
      res.add_info(fmt("check=increment_norm;eps=%g;lag=%g", eps, d), sup);
    }
    // the scaling window [eps^2, 8 eps^2] only carries the multi-mode
    // increment regime at the finer mollification scales; the slope gate
    // sits at the finest eps of the grid, coarser ones are informational
    double eps_min = 1e300;
    for (double e : eps_grid) eps_min = std::min(eps_min, e);
    const bool gated = std::fabs(eps - eps_min) < 1e-12;
    const SlopeFit fit = loglog_slope(lags, inc_norms);
    ResultRow r;
    r.suite = res.name;
    r.params = fmt("check=increment_slope;eps=%g;one_sided_min=%g", eps, slope_min);
    r.estimate = fit.slope;
    r.ci = fit.ci_halfwidth;
    r.target = 0.125;
    r.tolerance = kNaN;
    r.informational = !gated;
    r.pass = !gated || fit.slope >= slope_min;
    res.add(r);
  }

  double lo = 1e300, hi = 0.0;
  for (double v : norms) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  res.add_check("check=norm_stability_factor", hi / lo, 0.0, 1.0,
                stability_factor - 1.0);
  return res;
}

}  // namespace

// ------------------------------------------------------------- result plumbing

void SuiteResult::add(ResultRow row) {
  if (!row.informational && !row.pass) pass = false;
  rows.push_back(std::move(row));
}

void SuiteResult::add_check(const std::string& params, double estimate, double ci,
                            double target, double tolerance) {
  ResultRow r;
  r.suite = name;
  r.params = params;
  r.estimate = estimate;
  r.ci = ci;
  r.target = target;
  r.tolerance = tolerance;
  r.pass = std::fabs(estimate - target) <= tolerance;
  add(r);
}

void SuiteResult::add_info(const std::string& params, double estimate, double ci) {
  ResultRow r;
  r.suite = name;
  r.params = params;
  r.estimate = estimate;
  r.ci = ci;
  r.target = kNaN;
  r.tolerance = kNaN;
  r.informational = true;
  add(r);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "constants", "heat-check", "blowup-curve", "beta-stats", "simulate",
      "converge",  "decompose",  "sewing-check", "holder-norms"};
  return names;
}

json default_config(const std::string& suite) {
  json c;
  c["schema_version"] = 1;
  c["suite"] = suite;
  c["master_seed"] = 20260811;
  if (suite == "constants") {
  } else if (suite == "heat-check") {
    c["t_grid"] = {1e-2, 3.162e-3, 1e-3, 3.162e-4, 1e-4, 1e-5, 1e-6};
  } else if (suite == "blowup-curve") {
    c["eps_grid"] = {0.002, 0.001, 0.0005, 0.00025};
  } else if (suite == "beta-stats") {
    c["eps_grid"] = {0.2, 0.1, 0.05};
    c["paths"] = 4096;
    c["n_lo"] = 2;
    c["n_hi"] = 9;
    c["check_n_hi"] = 5;
    c["t0"] = 0.1;
    c["t1"] = 1.0;
    c["flagship_eps"] = 0.05;
    c["tolerance"] = 0.10;
  } else if (suite == "simulate") {
    c["epsilon"] = 0.1;
    c["g"] = "zero";
    c["g_param"] = 1.0;
    c["psi"] = "smooth-sine";
    c["psi_amplitude"] = 1.0;
    c["psi_index"] = 1;
    c["t_end"] = 0.5;
    c["save_times"] = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
    c["placement"] = "half";
    c["coefficient"] = 0.0;
    c["path_index"] = 0;
  } else if (suite == "converge") {
    c["eps_grid"] = {0.4, 0.2, 0.1, 0.05};
    c["paths"] = 4096;
    c["T"] = 0.5;
    c["x0"] = 0.0;
    c["g"] = "sine";
    c["g_param"] = 1.0;
    c["psi_value"] = 0.5;
    c["limit_mode_cutoff"] = 64;
    c["limit_dt"] = 2.5e-4;
    c["ks_tolerance"] = 0.030;
    c["moment_tolerance"] = 0.15;
    c["var_match_tolerance"] = 0.15;
    c["var_discrim_threshold"] = 0.5;
  } else if (suite == "decompose") {
    c["eps_grid"] = {0.2, 0.1, 0.05, 0.025};
    c["delta_grid"] = {0.05, 0.1, 0.2, 0.5};
    c["delta_eps"] = 0.1;
    c["s"] = 0.26;  // on the dt = eps^2/10 grid for the whole eps ladder
    c["t"] = 0.76;
    c["paths"] = 256;
    c["phi_mode"] = 3;
    c["g"] = "sine";
    c["g_param"] = 1.0;
    c["psi_value"] = 0.5;
    c["identity_tol"] = 1e-10;
    c["slope23_target"] = 0.25;
    c["slope23_tol"] = 0.1;
    c["slope456_target"] = 0.625;
    c["slope456_tol"] = 0.15;
  } else if (suite == "sewing-check") {
    c["bm_paths"] = 256;
    c["bm_max_level"] = 14;
    c["spde_paths"] = 64;
    c["spde_level"] = 12;
    c["context_level"] = 14;
    c["eps"] = 0.015625;
    c["dt"] = 1.52587890625e-05;  // 2^-16
    c["g"] = "sine";
    c["g_param"] = 1.0;
    c["psi_value"] = 0.5;
    c["phi_mode"] = 3;
  } else if (suite == "holder-norms") {
    c["eps_grid"] = {0.2, 0.1, 0.05};
    c["paths"] = 256;
    c["g"] = "sine";
    c["g_param"] = 1.0;
    c["psi"] = "weierstrass-quarter";
    c["psi_amplitude"] = 0.5;
    c["psi_index"] = 12;
    c["s"] = 0.5;
    c["alpha"] = 0.25;
    c["p"] = 4.0;
    c["pair_budget"] = 4096;
    c["slope_min"] = 0.10;
    c["stability_factor"] = 2.0;
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return c;
}

json resolve_config(const std::string& suite, const json& user) {
  json cfg = default_config(suite);
  for (const auto& [key, value] : user.items()) {
    if (!cfg.contains(key))
      throw std::invalid_argument("config." + key + ": unknown field for suite " +
                                  suite);
    const auto& def = cfg.at(key);
    const bool num_ok = def.is_number() && value.is_number();
    if (def.type() != value.type() && !num_ok)
      throw std::invalid_argument("config." + key + ": expected type " +
                                  std::string(def.type_name()));
    cfg[key] = value;
  }
  return cfg;
}

SuiteResult run_suite(const std::string& suite, const json& config) {
  const json cfg = resolve_config(suite, config);
  if (suite == "constants") return constants_suite(cfg);
  if (suite == "heat-check") return heat_check_suite(cfg);
  if (suite == "blowup-curve") return blowup_suite(cfg);
  if (suite == "beta-stats") return beta_stats_suite(cfg);
  if (suite == "simulate") return simulate_suite(cfg);
  if (suite == "converge") return converge_suite(cfg);
  if (suite == "decompose") return decompose_suite(cfg);
  if (suite == "sewing-check") return sewing_suite(cfg);
  if (suite == "holder-norms") return holder_suite(cfg);
  throw std::invalid_argument("unknown suite: " + suite);
}

std::string results_csv(const std::vector<ResultRow>& rows) {
  std::string out = "suite,params,estimate,ci,target,tolerance,pass\n";
  for (const auto& r : rows) {
    out += r.suite + "," + r.params + "," + fnum(r.estimate) + "," + fnum(r.ci) +
           "," + fnum(r.target) + "," + fnum(r.tolerance) + "," +
           (r.informational ? "info" : (r.pass ? "1" : "0")) + "\n";
  }
  return out;
}

namespace {
std::string now_utc() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::string hash_hex(const json& config) {
  const std::string s = config.dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}
}  // namespace

json manifest_json(const SuiteResult& result, const json& config,
                   const std::string& started_at, const std::string& finished_at) {
  json m;
  m["schema_version"] = 1;
  m["suite"] = result.name;
  m["tool_version"] = kToolVersion;
  m["config"] = config;
  m["config_hash"] = hash_hex(config);
  m["master_seed"] = config.value("master_seed", 0);
  m["started_at"] = started_at;
  m["finished_at"] = finished_at;
  m["pass"] = result.pass;
  m["rows"] = result.rows.size();
  json failed = json::array();
  for (const auto& r : result.rows)
    if (!r.informational && !r.pass) failed.push_back(r.params);
  m["failed_rows"] = failed;
  return m;
}

std::string summary_text(const SuiteResult& result) {
  std::string out = "suite " + result.name + ": " +
                    (result.pass ? "PASS" : "FAIL") + "\n";
  int checks = 0, passed = 0;
  for (const auto& r : result.rows) {
    if (r.informational) continue;
    ++checks;
    if (r.pass) ++passed;
    out += fmt("  [%s] %s  estimate=%.6g target=%.6g tol=%.3g\n",
               r.pass ? "pass" : "FAIL", r.params.c_str(), r.estimate, r.target,
               r.tolerance);
  }
  out += fmt("  %d/%d checks passed\n", passed, checks);
  return out;
}

bool run_and_write(const std::string& suite, const json& config,
                   const std::string& out_dir) {
  const json cfg = resolve_config(suite, config);
  const std::string started = now_utc();
  const SuiteResult result = run_suite(suite, cfg);
  const std::string finished = now_utc();

  std::filesystem::create_directories(out_dir);
  {
    std::ofstream f(out_dir + "/results.csv", std::ios::binary);
    f << results_csv(result.rows);
  }
  {
    std::ofstream f(out_dir + "/manifest.json", std::ios::binary);
    f << manifest_json(result, cfg, started, finished).dump(2) << "\n";
  }
  {
    std::ofstream f(out_dir + "/summary.txt", std::ios::binary);
    f << summary_text(result);
  }
  for (const auto& [name, body] : result.extra_files) {
    std::ofstream f(out_dir + "/" + name, std::ios::binary);
    f << body;
  }
  return result.pass;
}

}  // namespace sgmc
