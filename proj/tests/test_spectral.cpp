#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sgmc/spectral.hpp"
#include "support.hpp"

using namespace sgmc;
using namespace sgmc::test;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("basis synthesis at points") {
  CHECK(synthesize(SpectralField::unit(8, 1), 0.77) == doctest::Approx(1.0));
  CHECK(synthesize(SpectralField::unit(8, 2), 0.25) == doctest::Approx(kSqrt2));
  CHECK(synthesize(SpectralField::unit(8, 3), 0.0) == doctest::Approx(kSqrt2));
}

TEST_CASE("analyze picks out basis coefficients") {
  const int m = 16;
  SpectralTransform tr(m, grid_size_for(m));
  GridField g(tr.grid_size());

  for (int i = 0; i < tr.grid_size(); ++i)
    g.values[i] = basis_value(2, double(i) / tr.grid_size());
  SpectralField f = tr.analyze(g);
  CHECK(f[2] == doctest::Approx(1.0).epsilon(1e-12));
  for (int n = 1; n <= m; ++n)
    if (n != 2) CHECK(std::fabs(f[n]) < 1e-12);

  for (double& v : g.values) v = 3.0;
  f = tr.analyze(g);
  CHECK(f[1] == doctest::Approx(3.0).epsilon(1e-14));
  for (int n = 2; n <= m; ++n) CHECK(std::fabs(f[n]) < 1e-13);
}

TEST_CASE("analyze of e2*e2 against the quadrature oracle") {
  // 2 sin^2(2 pi x) = 1 - cos(4 pi x): coefficient 1 on e_1, -1/sqrt(2) on e_5
  const int m = 16;
  SpectralTransform tr(m, grid_size_for(m));
  GridField g(tr.grid_size());
  for (int i = 0; i < tr.grid_size(); ++i) {
    const double x = double(i) / tr.grid_size();
    const double e2 = basis_value(2, x);
    g.values[i] = e2 * e2;
  }
  const SpectralField f = tr.analyze(g);
  auto fx = [](double x) {
    const double e2 = basis_value(2, x);
    return e2 * e2;
  };
  for (int n = 1; n <= m; ++n)
    CHECK(f[n] == doctest::Approx(quadrature_coefficient(fx, n)).epsilon(1e-10));
  CHECK(f[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f[5] == doctest::Approx(-1.0 / kSqrt2).epsilon(1e-12));
}

TEST_CASE("Parseval round trip on random band-limited fields") {
  const int m = 33;
  SpectralTransform tr(m, grid_size_for(m));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const SpectralField f = random_field(m, seed);
    const SpectralField back = tr.analyze(tr.synthesize(f));
    CHECK(max_abs_diff(f, back) < 1e-12);
  }
}

TEST_CASE("heat semigroup") {
  const SpectralField f = random_field(12, 3);
  CHECK(max_abs_diff(apply_heat(f, 0.0), f) == 0.0);

  const SpectralField e2 = SpectralField::unit(8, 2);
  CHECK(apply_heat(e2, 0.3)[2] ==
        doctest::Approx(std::exp(-4.0 * M_PI * M_PI * 0.3)).epsilon(1e-14));

  const SpectralField a = apply_heat(apply_heat(f, 0.02), 0.05);
  const SpectralField b = apply_heat(f, 0.07);
  CHECK(max_abs_diff(a, b) < 1e-14);

  CHECK_THROWS_AS(apply_heat(f, -1e-9), std::invalid_argument);
}

TEST_CASE("gradient rotation and antisymmetry") {
  CHECK(l2_norm(apply_gradient(SpectralField::unit(8, 1))) == 0.0);
  const SpectralField g2 = apply_gradient(SpectralField::unit(8, 2));
  CHECK(g2[3] == doctest::Approx(kTwoPi).epsilon(1e-15));
  const SpectralField g3 = apply_gradient(SpectralField::unit(8, 3));
  CHECK(g3[2] == doctest::Approx(-kTwoPi).epsilon(1e-15));

  for (std::uint64_t seed = 11; seed <= 13; ++seed) {
    const SpectralField f = random_field(21, seed);
    const SpectralField g = random_field(21, seed + 100);
    CHECK(inner(apply_gradient(f), g) ==
          doctest::Approx(-inner(f, apply_gradient(g))).epsilon(1e-12));
    // commutation with the heat flow
    const SpectralField hg = apply_heat(apply_gradient(f), 0.01);
    const SpectralField gh = apply_gradient(apply_heat(f, 0.01));
    CHECK(max_abs_diff(hg, gh) < 1e-15 * l2_norm(hg));
  }
}

TEST_CASE("fractional laplacian") {
  const SpectralField f = random_field(9, 4);
  CHECK(max_abs_diff(apply_fractional_laplacian(f, 0.0), f) == 0.0);
  CHECK(apply_fractional_laplacian(SpectralField::unit(8, 2), 2.0)[2] ==
        doctest::Approx(kTwoPi * kTwoPi).epsilon(1e-14));
  CHECK(apply_fractional_laplacian(SpectralField::unit(8, 4), 1.0)[4] ==
        doctest::Approx(4.0 * M_PI).epsilon(1e-14));
  CHECK_THROWS_AS(apply_fractional_laplacian(f, -0.5), std::invalid_argument);
}

TEST_CASE("heat kernel mass, equilibration and peak") {
  for (double t : {1e-3, 1e-1, 1.0}) {
    const int n = 4096;
    double mass = 0.0;
    for (int i = 0; i < n; ++i) mass += heat_kernel_value(t, double(i) / n);
    CHECK(mass / n == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(heat_kernel_value(10.0, 0.37) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(heat_kernel_value(1e-4, 0.0) ==
        doctest::Approx(1.0 / std::sqrt(4.0 * M_PI * 1e-4)).epsilon(1e-10));
  CHECK_THROWS_AS(heat_kernel_value(0.0, 0.1), std::invalid_argument);
}

TEST_CASE("heat kernel image sum agrees with the spectral route") {
  // absolute comparison: deep in the tails the two routes agree as
  // distributions while the values themselves sit at the rounding floor
  for (double t : {1e-4, 1e-3, 1e-2}) {
    for (double x : {0.0, 0.13, 0.5}) {
      double spectral = 1.0;
      for (int k = 1; k < 4000; ++k) {
        const double term = 2.0 * std::exp(-4.0 * M_PI * M_PI * k * k * t) *
                            std::cos(kTwoPi * k * x);
        spectral += term;
        if (std::fabs(term) < 1e-18) break;
      }
      const double scale = 1.0 / std::sqrt(4.0 * M_PI * t);
      CHECK(std::fabs(heat_kernel_value(t, x) - spectral) < 1e-9 * scale);
    }
  }
}

TEST_CASE("heat derivative norms: two independent routes") {
  // mode sum vs Parseval on the analyzed kernel
  const int m = 128;
  SpectralTransform tr(m, grid_size_for(m));
  for (double t : {5e-3, 2e-2}) {
    GridField g(tr.grid_size());
    for (int i = 0; i < tr.grid_size(); ++i)
      g.values[i] = heat_kernel_value(t, double(i) / tr.grid_size());
    SpectralField p = tr.analyze(g);
    for (int j = 0; j <= 2; ++j) {
      double parseval = 0.0;
      for (int n = 1; n <= m; ++n) parseval += p[n] * p[n];
      CHECK(heat_deriv_l2norm_sq(j, t) ==
            doctest::Approx(parseval).epsilon(1e-10));
      p = apply_gradient(p);
    }
  }
}

TEST_CASE("heat norm asymptotics") {
  // j = 2, t = 1e-4 within 2% of the leading term 3/(32 sqrt(2 pi)) t^{-5/2}
  const double t = 1e-4;
  const double lead = 3.0 / (32.0 * std::sqrt(2.0 * M_PI)) * std::pow(t, -2.5);
  CHECK(lead == doctest::Approx(3.74008388e8).epsilon(1e-6));
  CHECK(heat_deriv_l2norm_sq(2, t) == doctest::Approx(lead).epsilon(0.02));

  // j = 1 squared norm scales like t^{-3/2}
  const double v1 = heat_deriv_l2norm_sq(1, 1e-3);
  const double v2 = heat_deriv_l2norm_sq(1, 1e-4);
  const double slope = std::log(v2 / v1) / std::log(1e-4 / 1e-3);
  CHECK(slope == doctest::Approx(-1.5).epsilon(0.034));

  CHECK(heat_deriv_l2norm_sq(0, 50.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(heat_deriv_l2norm_sq(2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(heat_deriv_l2norm_sq(3, 0.1), std::invalid_argument);
}

TEST_CASE("transform input validation") {
  CHECK_THROWS_AS(SpectralTransform(16, 17), std::invalid_argument);
  SpectralTransform tr(16, 64);
  GridField wrong(32);
  CHECK_THROWS_AS(tr.analyze(wrong), std::invalid_argument);
}
