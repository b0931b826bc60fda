#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgmc/nonlinearity.hpp"

namespace sgmc {

enum class SemigroupPlacement { full, half, none };

double placement_theta(SemigroupPlacement p);
SemigroupPlacement parse_placement(const std::string& name);
std::string placement_name(SemigroupPlacement p);

/// Coefficient in front of g'g(u) xi in the limit dynamics, (8 pi^{1/4})^{-1}.
double default_limit_coefficient();

/// Mode cutoff tied to the mollifier: 2 ceil(2/eps), at least 16.
int default_mode_cutoff(double eps);

/// dt = eps^2 / 10, the mollifier-resolving step.
double default_dt(double eps);

/// Full experiment description for one path family.  epsilon = 0 selects the
/// limit equation.
struct SimConfig {
  double epsilon = 0.1;
  int mode_cutoff = 0;        // 0: derive from epsilon
  double dt = 0.0;            // 0: derive from epsilon
  double t_end = 1.0;
  Nonlinearity g = Nonlinearity::zero();
  InitialCondition psi = InitialCondition::constant(0.0);
  double coefficient = default_limit_coefficient();  // limit equation only
  SemigroupPlacement placement = SemigroupPlacement::half;
  std::vector<double> save_times;
  std::uint64_t master_seed = 1;

  bool is_limit() const { return epsilon == 0.0; }
  int resolved_mode_cutoff() const;
  double resolved_dt() const;
  int steps() const;

  /// Enforces the documented invariants (dt <= eps^2/10, M >= ceil(2/eps),
  /// t_end <= 1, sorted save times, ...).  Throws std::invalid_argument with
  /// the offending field in the message.
  void validate() const;

  /// FNV-1a hash of the canonical textual form; stable across runs.
  std::uint64_t hash() const;
  std::string canonical_string() const;
};

}  // namespace sgmc
