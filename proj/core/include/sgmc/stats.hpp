#pragma once

#include <cstdint>
#include <vector>

#include "sgmc/spectral.hpp"

namespace sgmc {

/// Streaming moment accumulator with batch-means confidence intervals.
/// Samples are tagged (typically by path index); the tag fixes the batch, so
/// merges are associative and commutative and estimates do not depend on the
/// worker layout.
class MCStats {
 public:
  static constexpr int kBatches = 32;
  static constexpr int kMaxPower = 8;

  void add(double x, std::uint64_t tag);
  void merge(const MCStats& other);

  std::int64_t count() const { return count_; }
  double mean() const;
  double variance() const;           // unbiased
  double power_mean(int p) const;    // mean of x^p
  double abs_power_mean(int p) const;

  /// 95% half-width of the mean from batch means (t-quantile, B-1 df).
  double ci_halfwidth() const;
  /// 95% half-width for the variance estimate from per-batch variances.
  double variance_ci_halfwidth() const;

 private:
  std::int64_t count_ = 0;
  double power_sum_[kMaxPower] = {0};      // sums of x^p, p = 1..8
  double abs_power_sum_[kMaxPower] = {0};  // sums of |x|^p
  std::int64_t batch_count_[kBatches] = {0};
  double batch_sum_[kBatches] = {0};
  double batch_sum_sq_[kBatches] = {0};
};

struct ValueWithCI {
  double value = 0.0;
  double ci_halfwidth = 0.0;
};

/// (mean |x|^p)^{1/p} with a batch CI; p in [1, 8].  Rejects empty input.
ValueWithCI lp_moment(const std::vector<double>& samples, double p);

struct HolderEstimate {
  double alpha = 0.0;
  double p = 2.0;
  double value = 0.0;
  double ci_halfwidth = 0.0;
  int grid_resolution = 0;
};

/// sup over probed pairs of ||u(x) - u(y)||_{L_p} / d(x,y)^alpha with torus
/// distance, pairs scheduled deterministically at dyadic separations.
/// `fields[path]` are grid samples of one field per path.
HolderEstimate holder_seminorm(const std::vector<GridField>& fields, double alpha,
                               double p, int pair_budget);

/// Sample covariance, over paths, of per-path values a and b with batch CI.
ValueWithCI empirical_cov(const std::vector<double>& a, const std::vector<double>& b);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Two-sample Kolmogorov-Smirnov with the asymptotic p-value.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double ci_halfwidth = 0.0;  // 95%, residual based
};

/// Least squares in log-log coordinates; rejects nonpositive data.
SlopeFit loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace sgmc
