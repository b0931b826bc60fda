#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sgmc/rng.hpp"
#include "sgmc/stats.hpp"

using namespace sgmc;

TEST_CASE("lp moments") {
  const std::vector<double> c(100, -2.5);
  CHECK(lp_moment(c, 3.0).value == doctest::Approx(2.5).epsilon(1e-14));

  std::vector<double> z(40000);
  for (std::size_t i = 0; i < z.size(); ++i)
    z[i] = normal_draw(12, 0, i, 0);
  const ValueWithCI p2 = lp_moment(z, 2.0);
  CHECK(std::fabs(p2.value - 1.0) < 3.0 * std::max(p2.ci_halfwidth, 5e-3));
  const ValueWithCI p4 = lp_moment(z, 4.0);
  CHECK(std::fabs(p4.value - 1.3160740129524924) <
        3.0 * std::max(p4.ci_halfwidth, 2e-2));

  CHECK_THROWS_AS(lp_moment({}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(lp_moment(c, 9.0), std::invalid_argument);
}

TEST_CASE("MCStats merge associativity") {
  std::vector<double> xs(4000);
  for (std::size_t i = 0; i < xs.size(); ++i)
    xs[i] = normal_draw(5, 1, i, 0) + 0.3;

  MCStats whole;
  for (std::size_t i = 0; i < xs.size(); ++i) whole.add(xs[i], i);

  // arbitrary partition, merged in a different order
  MCStats a, b, c;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    (i % 3 == 0 ? a : (i % 3 == 1 ? b : c)).add(xs[i], i);
  }
  MCStats m1 = c;
  m1.merge(a);
  m1.merge(b);
  CHECK(m1.mean() == doctest::Approx(whole.mean()).epsilon(1e-12));
  CHECK(m1.variance() == doctest::Approx(whole.variance()).epsilon(1e-12));
  CHECK(m1.ci_halfwidth() == doctest::Approx(whole.ci_halfwidth()).epsilon(1e-12));
  CHECK(m1.abs_power_mean(5) ==
        doctest::Approx(whole.abs_power_mean(5)).epsilon(1e-12));
}

TEST_CASE("holder seminorm") {
  const int n = 256;
  // constant fields have zero seminorm
  std::vector<GridField> consts(8, GridField(n));
  for (auto& f : consts)
    for (double& v : f.values) v = 4.2;
  CHECK(holder_seminorm(consts, 0.25, 2.0, 1024).value == 0.0);

  auto weierstrass_fields = [&](int depth, int res) {
    GridField f(res);
    for (int i = 0; i < res; ++i) {
      double acc = 0.0, freq = 1.0, amp = 1.0;
      for (int j = 0; j <= depth; ++j) {
        acc += amp * std::cos(2.0 * M_PI * freq * i / res);
        freq *= 2.0;
        amp *= std::pow(2.0, -0.25);
      }
      f.values[i] = acc;
    }
    return std::vector<GridField>(4, f);
  };

  // quarter-Hoelder seminorm stable under resolution doubling
  const double v1 = holder_seminorm(weierstrass_fields(6, 256), 0.25, 2.0, 4096).value;
  const double v2 = holder_seminorm(weierstrass_fields(6, 512), 0.25, 2.0, 4096).value;
  CHECK(std::fabs(v2 / v1 - 1.0) < 0.10);

  // at alpha = 1/2 the estimate grows like 2^{depth/4} with construction depth
  const double g1 = holder_seminorm(weierstrass_fields(4, 2048), 0.5, 2.0, 8192).value;
  const double g2 = holder_seminorm(weierstrass_fields(8, 2048), 0.5, 2.0, 8192).value;
  CHECK(g2 / g1 > 1.5);
  CHECK(g2 / g1 < 2.8);
}

TEST_CASE("empirical covariance on synthetic Brownian inputs") {
  const int paths = 4000;
  const double s = 0.3, t = 0.8;
  std::vector<double> inc1(paths), inc2(paths);
  for (int p = 0; p < paths; ++p) {
    inc1[p] = std::sqrt(t - s) * normal_draw(31, p, 0, 0);
    inc2[p] = std::sqrt(t - s) * normal_draw(31, p, 1, 0);
  }
  const ValueWithCI var = empirical_cov(inc1, inc1);
  CHECK(std::fabs(var.value - (t - s)) < 4.0 * (t - s) * std::sqrt(2.0 / paths));
  const ValueWithCI cov = empirical_cov(inc1, inc2);
  CHECK(std::fabs(cov.value) < 4.0 * (t - s) / std::sqrt(double(paths)));
  CHECK_THROWS_AS(empirical_cov(std::vector<double>(10, 0.0),
                                std::vector<double>(10, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("Kolmogorov-Smirnov two-sample") {
  std::vector<double> a(500), b(500);
  for (int i = 0; i < 500; ++i) {
    a[i] = normal_draw(7, 0, i, 0);
    b[i] = a[i];
  }
  CHECK(ks_two_sample(a, b).statistic == doctest::Approx(0.0).epsilon(1e-12));

  // disjoint point masses
  std::vector<double> lo(100, -1.0), hi(100, 1.0);
  CHECK(ks_two_sample(lo, hi).statistic == doctest::Approx(1.0));

  // invariance under a common strictly monotone transformation
  for (int i = 0; i < 500; ++i) b[i] = normal_draw(8, 0, i, 0) * 1.3;
  const double d0 = ks_two_sample(a, b).statistic;
  std::vector<double> ta(a), tb(b);
  for (auto* v : {&ta, &tb})
    for (double& x : *v) x = std::atan(x) + 3.0;
  CHECK(ks_two_sample(ta, tb).statistic == doctest::Approx(d0).epsilon(1e-12));

  // null calibration: p-values spread over (0,1), not collapsing to 0 or 1
  double psum = 0.0;
  const int reps = 64, n = 10000;
  for (int r = 0; r < reps; ++r) {
    std::vector<double> u(n), v(n);
    for (int i = 0; i < n; ++i) {
      u[i] = normal_draw(100 + r, 0, i, 0);
      v[i] = normal_draw(200 + r, 0, i, 0);
    }
    psum += ks_two_sample(u, v).p_value;
  }
  CHECK(psum / reps > 0.3);
  CHECK(psum / reps < 0.7);

  CHECK_THROWS_AS(ks_two_sample({}, {1.0}), std::invalid_argument);
}

TEST_CASE("log-log slope fits") {
  const std::vector<double> xs = {0.5, 1.0, 2.0, 4.0, 8.0};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(x * x);
  SlopeFit fit = loglog_slope(xs, ys);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));

  ys.assign(xs.size(), 3.7);
  fit = loglog_slope(xs, ys);
  CHECK(fit.slope == doctest::Approx(0.0));

  // y = x^{5/8}, 1% multiplicative noise
  ys.clear();
  for (std::size_t i = 0; i < xs.size(); ++i)
    ys.push_back(std::pow(xs[i], 0.625) *
                 (1.0 + 0.01 * normal_draw(55, 0, i, 0)));
  fit = loglog_slope(xs, ys);
  CHECK(std::fabs(fit.slope - 0.625) < 0.05);

  CHECK_THROWS_AS(loglog_slope({1.0, 2.0}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(loglog_slope({1.0, -2.0, 3.0}, {1.0, 2.0, 3.0}),
                  std::invalid_argument);
}
