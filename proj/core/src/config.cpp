#include "sgmc/config.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sgmc {

double placement_theta(SemigroupPlacement p) {
  switch (p) {
    case SemigroupPlacement::full: return 1.0;
    case SemigroupPlacement::half: return 0.5;
    case SemigroupPlacement::none: return 0.0;
  }
  return 0.5;
}

SemigroupPlacement parse_placement(const std::string& name) {
  if (name == "full") return SemigroupPlacement::full;
  if (name == "half") return SemigroupPlacement::half;
  if (name == "none") return SemigroupPlacement::none;
  throw std::invalid_argument("unknown semigroup placement: " + name);
}

std::string placement_name(SemigroupPlacement p) {
  switch (p) {
    case SemigroupPlacement::full: return "full";
    case SemigroupPlacement::half: return "half";
    case SemigroupPlacement::none: return "none";
  }
  return "?";
}

double default_limit_coefficient() { return 1.0 / (8.0 * std::sqrt(std::sqrt(M_PI))); }

int default_mode_cutoff(double eps) {
  if (!(eps > 0.0)) return 64;
  return std::max(16, 2 * int(std::ceil(2.0 / eps)));
}

double default_dt(double eps) {
  if (!(eps > 0.0)) return 2.5e-4;
  return eps * eps / 10.0;
}

int SimConfig::resolved_mode_cutoff() const {
  return mode_cutoff > 0 ? mode_cutoff : default_mode_cutoff(epsilon);
}

double SimConfig::resolved_dt() const { return dt > 0.0 ? dt : default_dt(epsilon); }

int SimConfig::steps() const {
  return int(std::llround(t_end / resolved_dt()));
}

void SimConfig::validate() const {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument("config.epsilon: must be finite and >= 0");
  if (!(t_end > 0.0) || t_end > 1.0)
    throw std::invalid_argument("config.t_end: must lie in (0, 1]");
  const double h = resolved_dt();
  if (!(h > 0.0)) throw std::invalid_argument("config.dt: must be > 0");
  const int m = resolved_mode_cutoff();
  if (m < 1) throw std::invalid_argument("config.mode_cutoff: must be >= 1");
  if (epsilon > 0.0) {
    if (h > epsilon * epsilon / 10.0 + 1e-15)
      throw std::invalid_argument("config.dt: must be <= epsilon^2/10");
    if (m < int(std::ceil(2.0 / epsilon)))
      throw std::invalid_argument("config.mode_cutoff: must be >= ceil(2/epsilon)");
  }
  const double nsteps = t_end / h;
  if (std::fabs(nsteps - std::llround(nsteps)) > 1e-9)
    throw std::invalid_argument("config.dt: must divide t_end");
  double prev = -1.0;
  for (double s : save_times) {
    if (s < 0.0 || s > t_end)
      throw std::invalid_argument("config.save_times: entries must lie in [0, t_end]");
    if (s <= prev)
      throw std::invalid_argument("config.save_times: must be strictly increasing");
    prev = s;
  }
}

std::string SimConfig::canonical_string() const {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "eps=%.17g;M=%d;dt=%.17g;T=%.17g;g=%s:%.17g;psi=%s:%.17g:%d;"
                "coef=%.17g;placement=%s;seed=%llu",
                epsilon, resolved_mode_cutoff(), resolved_dt(), t_end,
                g.name().c_str(), g.param, psi.name().c_str(), psi.amplitude,
                psi.index, coefficient, placement_name(placement).c_str(),
                static_cast<unsigned long long>(master_seed));
  std::string s(buf);
  s += ";save=";
  for (double t : save_times) {
    std::snprintf(buf, sizeof buf, "%.17g,", t);
    s += buf;
  }
  return s;
}

std::uint64_t SimConfig::hash() const {
  const std::string s = canonical_string();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace sgmc
