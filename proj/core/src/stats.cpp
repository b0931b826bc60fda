#include "sgmc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sgmc {

namespace {

// two-sided 95% t quantiles for df = 1..40, then ~1.96.
double t_quantile_975(int df) {
  static const double table[] = {
      12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
      2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
      2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042,
      2.040,  2.037, 2.035, 2.032, 2.030, 2.028, 2.026, 2.024, 2.023, 2.021};
  if (df < 1) return 0.0;
  if (df <= 40) return table[df - 1];
  return 1.960 + 2.5 / df;
}

double batch_ci(const double* sums, const std::int64_t* counts, int nb, double grand) {
  // CI from the spread of batch means around the grand mean.
  int used = 0;
  double ss = 0.0;
  for (int b = 0; b < nb; ++b) {
    if (counts[b] == 0) continue;
    const double mb = sums[b] / double(counts[b]);
    ss += (mb - grand) * (mb - grand);
    ++used;
  }
  if (used < 2) return 0.0;
  const double sd = std::sqrt(ss / (used - 1));
  return t_quantile_975(used - 1) * sd / std::sqrt(double(used));
}

}  // namespace

void MCStats::add(double x, std::uint64_t tag) {
  ++count_;
  double p = 1.0, ap = 1.0;
  for (int i = 0; i < kMaxPower; ++i) {
    p *= x;
    ap *= std::fabs(x);
    power_sum_[i] += p;
    abs_power_sum_[i] += ap;
  }
  const int b = int(tag % kBatches);
  batch_count_[b] += 1;
  batch_sum_[b] += x;
  batch_sum_sq_[b] += x * x;
}

void MCStats::merge(const MCStats& other) {
  count_ += other.count_;
  for (int i = 0; i < kMaxPower; ++i) {
    power_sum_[i] += other.power_sum_[i];
    abs_power_sum_[i] += other.abs_power_sum_[i];
  }
  for (int b = 0; b < kBatches; ++b) {
    batch_count_[b] += other.batch_count_[b];
    batch_sum_[b] += other.batch_sum_[b];
    batch_sum_sq_[b] += other.batch_sum_sq_[b];
  }
}

double MCStats::mean() const {
  if (count_ == 0) throw std::logic_error("MCStats: empty");
  return power_sum_[0] / double(count_);
}

double MCStats::variance() const {
  if (count_ < 2) throw std::logic_error("MCStats: need >= 2 samples");
  const double m = mean();
  return (power_sum_[1] - count_ * m * m) / double(count_ - 1);
}

double MCStats::power_mean(int p) const {
  if (p < 1 || p > kMaxPower) throw std::invalid_argument("MCStats: p out of range");
  if (count_ == 0) throw std::logic_error("MCStats: empty");
  return power_sum_[p - 1] / double(count_);
}

double MCStats::abs_power_mean(int p) const {
  if (p < 1 || p > kMaxPower) throw std::invalid_argument("MCStats: p out of range");
  if (count_ == 0) throw std::logic_error("MCStats: empty");
  return abs_power_sum_[p - 1] / double(count_);
}

double MCStats::ci_halfwidth() const { return batch_ci(batch_sum_, batch_count_, kBatches, mean()); }

double MCStats::variance_ci_halfwidth() const {
  // per-batch variances around their grand mean
  double vb[kBatches];
  int used = 0;
  for (int b = 0; b < kBatches; ++b) {
    if (batch_count_[b] < 2) continue;
    const double mb = batch_sum_[b] / double(batch_count_[b]);
    vb[used] = (batch_sum_sq_[b] - batch_count_[b] * mb * mb) /
               double(batch_count_[b] - 1);
    ++used;
  }
  if (used < 2) return 0.0;
  double grand = 0.0;
  for (int b = 0; b < used; ++b) grand += vb[b];
  grand /= used;
  double ss = 0.0;
  for (int b = 0; b < used; ++b) ss += (vb[b] - grand) * (vb[b] - grand);
  const double sd = std::sqrt(ss / (used - 1));
  return t_quantile_975(used - 1) * sd / std::sqrt(double(used));
}

ValueWithCI lp_moment(const std::vector<double>& samples, double p) {
  if (samples.empty()) throw std::invalid_argument("lp_moment: empty input");
  if (p < 1.0 || p > 8.0) throw std::invalid_argument("lp_moment: p must lie in [1, 8]");
  MCStats acc;
  for (std::size_t i = 0; i < samples.size(); ++i)
    acc.add(std::pow(std::fabs(samples[i]), p), i);
  const double m = acc.mean();
  const double ci = acc.ci_halfwidth();
  const double v = std::pow(m, 1.0 / p);
  // delta method for the root
  const double dci = (m > 0.0) ? v * ci / (p * m) : 0.0;
  return {v, dci};
}

HolderEstimate holder_seminorm(const std::vector<GridField>& fields, double alpha,
                               double p, int pair_budget) {
  if (fields.empty()) throw std::invalid_argument("holder_seminorm: empty ensemble");
  const int n = fields.front().size();
  if (n < 2) throw std::invalid_argument("holder_seminorm: need >= 2 grid points");
  HolderEstimate best;
  best.alpha = alpha;
  best.p = p;
  best.grid_resolution = n;
  // dyadic separations 1, 2, 4, ..., n/2 grid cells
  int n_seps = 0;
  for (int s = 1; s <= n / 2; s *= 2) ++n_seps;
  const int per_sep = std::max(1, pair_budget / std::max(1, n_seps));
  std::vector<double> diffs(fields.size());
  for (int sep = 1; sep <= n / 2; sep *= 2) {
    const int stride = std::max(1, n / per_sep);
    const double dist = std::min(double(sep) / n, 1.0 - double(sep) / n);
    for (int i0 = 0; i0 < n; i0 += stride) {
      const int i1 = (i0 + sep) % n;
      for (std::size_t f = 0; f < fields.size(); ++f)
        diffs[f] = fields[f].values[i0] - fields[f].values[i1];
      const ValueWithCI m = lp_moment(diffs, p);
      const double ratio = m.value / std::pow(dist, alpha);
      if (ratio > best.value) {
        best.value = ratio;
        best.ci_halfwidth = m.ci_halfwidth / std::pow(dist, alpha);
      }
    }
  }
  return best;
}

ValueWithCI empirical_cov(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("empirical_cov: size mismatch");
  if (a.size() < 100) throw std::invalid_argument("empirical_cov: need >= 100 paths");
  const std::size_t n = a.size();
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= double(n);
  mb /= double(n);
  MCStats prod;
  for (std::size_t i = 0; i < n; ++i) prod.add((a[i] - ma) * (b[i] - mb), i);
  return {prod.mean() * double(n) / double(n - 1), prod.ci_halfwidth()};
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty input");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = double(a.size()), nb = double(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0, fa = 0.0, fb = 0.0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      fa = double(++i) / na;
    } else if (b[j] < a[i]) {
      fb = double(++j) / nb;
    } else {  // ties advance both samples
      const double v = a[i];
      while (i < a.size() && a[i] == v) ++i;
      while (j < b.size() && b[j] == v) ++j;
      fa = double(i) / na;
      fb = double(j) / nb;
    }
    d = std::max(d, std::fabs(fa - fb));
  }
  const double ne = na * nb / (na + nb);
  const double lam = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  double pv = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lam * lam);
    pv += sign * term;
    sign = -sign;
    if (term < 1e-12) break;
  }
  pv = std::min(1.0, std::max(0.0, 2.0 * pv));
  return {d, pv};
}

SlopeFit loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 3)
    throw std::invalid_argument("loglog_slope: need >= 3 points");
  const std::size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
      throw std::invalid_argument("loglog_slope: data must be positive");
    const double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double dn = double(n);
  const double denom = dn * sxx - sx * sx;
  SlopeFit fit;
  fit.slope = (dn * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / dn;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::log(ys[i]) - fit.intercept - fit.slope * std::log(xs[i]);
    ss += r * r;
  }
  if (n > 2) {
    const double se = std::sqrt(ss / double(n - 2) / (sxx - sx * sx / dn));
    fit.ci_halfwidth = t_quantile_975(int(n) - 2) * se;
  }
  return fit;
}

}  // namespace sgmc
