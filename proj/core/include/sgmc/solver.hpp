#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgmc/config.hpp"
#include "sgmc/noise.hpp"

namespace sgmc {

/// Per-configuration scratch shared by all steppers on one thread: the FFT
/// pair, cached semigroup multipliers, per-step noise fields and basis rows
/// for the beta modes.  Not thread safe; one instance per worker.
class Workspace {
 public:
  explicit Workspace(const SimConfig& cfg);

  const SimConfig& cfg() const { return cfg_; }
  int mode_cutoff() const { return m_; }
  int grid_size() const { return n_; }
  double dt() const { return dt_; }
  double eps_prefactor() const { return eps_pref_; }
  const SpectralTransform& transform() const { return transform_; }

  /// Builds the step noise fields from raw increments (mollified kernel for
  /// eps > 0, white kernel for the limit equation).
  void make_noise(const BrownianIncrements& inc);
  const StepNoise& noise() const { return noise_; }

  /// y <- heat_dt y  and  y <- y + heat_{theta dt} v, coefficientwise.
  void heat_step(SpectralField& y) const;
  void add_placed(SpectralField& y, const SpectralField& v) const;

  /// Exact spectral sampling of psi on this workspace's grid.
  SpectralField sample_initial(const InitialCondition& psi) const;

  const std::vector<double>& basis_row(int n) const;  // e_n on the grid

 private:
  SimConfig cfg_;
  int m_, n_;
  double dt_, theta_, eps_pref_;
  SpectralTransform transform_;
  std::vector<double> heat_dt_, heat_theta_;
  StepNoise noise_;
  mutable std::vector<std::vector<double>> basis_rows_;

 public:
  GridField scratch_grid;   // reusable buffers for steppers
  GridField scratch_grid2;
  SpectralField scratch_field;
};

/// One exponential-Euler step of the mollified equation
///   du = Lap u dt + eps^{3/4} g(u) d(grad xi_eps):
/// u <- P_dt u + P_{theta dt}[ eps^{3/4} analyze(g(u) . kernel) ].
/// The workspace must hold the current step's noise.
SpectralField step_mollified(const SpectralField& u, Workspace& ws);

/// One step of the limit equation du = Lap u dt + coef g'g(u) dW (spectrally
/// truncated white noise).
SpectralField step_limit(const SpectralField& u, Workspace& ws);

/// Conveniences on fresh workspaces (slow; tests and one-off use).
SpectralField step_mollified(const SpectralField& u, const BrownianIncrements& inc,
                             const SimConfig& cfg);
SpectralField step_limit(const SpectralField& u, const BrownianIncrements& inc,
                         const SimConfig& cfg);

/// What solve_path records beyond the u snapshots at cfg.save_times.
struct RecordOptions {
  bool record_x = false;          // X = J^eps_{0,.}[1] snapshots at save times
  int beta_lo = 0, beta_hi = -1;  // record beta^{eps,n} for n in [lo, hi]
  int beta_stride = 1;            // beta samples every this many steps
  double dense_from = -1.0;       // record u (and X if record_x) per step
  double dense_to = -1.0;         //   for t in [dense_from, dense_to]
  int dense_stride = 1;           // keep every this many steps of the window
};

struct BetaRecord {
  int n_lo = 0, n_hi = -1;
  int stride = 1;
  std::vector<double> times;                     // includes t = 0
  std::vector<std::vector<double>> series;       // [n - n_lo][time index]
  double value(int n, int idx) const { return series[n - n_lo][idx]; }
};

/// Time-indexed record of one path.  All channels are driven by the single
/// increment stream (master_seed, path_index).
struct Trajectory {
  SimConfig cfg;
  std::uint64_t path_index = 0;
  std::uint64_t config_hash = 0;

  std::vector<double> save_times;
  std::vector<SpectralField> u;        // at save_times
  std::vector<SpectralField> x;        // at save_times when recorded

  // dense record on [dense_from, dense_to], every dense_stride steps
  int dense_first_step = -1;
  int dense_stride = 1;
  std::vector<SpectralField> u_steps;  // u at recorded step boundaries
  std::vector<SpectralField> x_steps;

  BetaRecord beta;

  int step_of_time(double t) const;    // exact step index of a save/dense time
};

/// Full driver: iterates the configured stepper from psi to t_end.
/// Identical (cfg, path_index) inputs give bit-identical trajectories.
Trajectory solve_path(const SimConfig& cfg, std::uint64_t path_index,
                      const RecordOptions& opts = {});

/// Same loop reusing a caller-owned workspace (hot path for suites).
Trajectory solve_path(Workspace& ws, std::uint64_t path_index,
                      const RecordOptions& opts = {});

}  // namespace sgmc
