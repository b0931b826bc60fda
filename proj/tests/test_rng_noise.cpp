#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sgmc/noise.hpp"
#include "sgmc/rng.hpp"
#include "support.hpp"

using namespace sgmc;
using namespace sgmc::test;

TEST_CASE("philox4x32-10 known answers") {
  // reference vectors of the Random123 distribution
  auto r = philox4x32({0, 0, 0, 0}, {0, 0});
  CHECK(r[0] == 0x6627e8d5u);
  CHECK(r[1] == 0xe169c58du);
  CHECK(r[2] == 0xbc57ac4cu);
  CHECK(r[3] == 0x9b00dbd8u);

  r = philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                 {0xffffffffu, 0xffffffffu});
  CHECK(r[0] == 0x408f276du);
  CHECK(r[1] == 0x41c83b0eu);
  CHECK(r[2] == 0xa20bc7c6u);
  CHECK(r[3] == 0x6d5451fdu);

  r = philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                 {0xa4093822u, 0x299f31d0u});
  CHECK(r[0] == 0xd16cfe09u);
  CHECK(r[1] == 0x94fdccebu);
  CHECK(r[2] == 0x5001e420u);
  CHECK(r[3] == 0x24126ea1u);
}

TEST_CASE("increment sampling determinism and errors") {
  RngStream a{42, 7, 0}, b{42, 7, 0};
  const BrownianIncrements ia = sample_increments(a, 16, 1e-3);
  const BrownianIncrements ib = sample_increments(b, 16, 1e-3);
  CHECK(ia.dw == ib.dw);
  CHECK(a.step_counter == 1);

  // different path or step decorrelates
  RngStream c{42, 8, 0};
  CHECK(sample_increments(c, 16, 1e-3).dw != ia.dw);

  RngStream d{42, 7, 0};
  CHECK_THROWS_AS(sample_increments(d, 16, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(sample_increments(d, 0, 1e-3), std::invalid_argument);
}

TEST_CASE("increment variance matches dt (law of large numbers)") {
  const double dt = 1e-3;
  const int draws = 1000000;
  RngStream s{2024, 0, 0};
  double sum = 0.0, sum2 = 0.0;
  // mode-1 increments over many steps
  for (int i = 0; i < draws / 8; ++i) {
    const BrownianIncrements inc = sample_increments(s, 8, dt);
    for (double v : inc.dw) {
      sum += v;
      sum2 += v * v;
    }
  }
  const double var = sum2 / draws - (sum / draws) * (sum / draws);
  CHECK(std::fabs(var - dt) < 3.0 * dt / std::sqrt(double(draws)));
}

TEST_CASE("white noise pairing") {
  SpectralField h(4);
  BrownianIncrements inc;
  inc.dt = 0.01;
  inc.dw = {0.5, -0.25, 1.0, 2.0};
  CHECK(white_noise_pairing(h, inc) == 0.0);

  h[1] = 1.0;
  h[2] = -2.0;
  h[3] = 0.5;
  h[4] = 3.0;
  BrownianIncrements ones;
  ones.dt = 1.0;
  ones.dw = {1.0, 1.0, 1.0, 1.0};
  CHECK(white_noise_pairing(h, ones) == doctest::Approx(2.5).epsilon(1e-15));

  SpectralField mismatch(5);
  CHECK_THROWS_AS(white_noise_pairing(mismatch, inc), std::invalid_argument);
}

TEST_CASE("discrete Ito isometry and orthogonality (Monte Carlo)") {
  const double dt = 1e-2;
  const int k = 100000;
  SpectralField h(4);
  h[2] = 1.0;
  h[3] = 1.0;  // |h|^2 = 2
  SpectralField h_perp(4);
  h_perp[2] = 1.0;
  h_perp[3] = -1.0;
  RngStream s{99, 1, 0};
  double sum = 0, sum2 = 0, cross = 0;
  for (int i = 0; i < k; ++i) {
    const BrownianIncrements inc = sample_increments(s, 4, dt);
    const double v = white_noise_pairing(h, inc);
    const double w = white_noise_pairing(h_perp, inc);
    sum += v;
    sum2 += v * v;
    cross += v * w;
  }
  const double var = sum2 / k - (sum / k) * (sum / k);
  CHECK(std::fabs(var / (2.0 * dt) - 1.0) < 5.0 / std::sqrt(double(k)));
  CHECK(std::fabs(cross / k) < 5.0 / std::sqrt(double(k)) * 2.0 * dt);
}

TEST_CASE("gradient mollifier action") {
  const double eps = 0.1;
  const SpectralField out = grad_mollifier_action(SpectralField::unit(8, 2), eps);
  CHECK(out[3] == doctest::Approx(2.0 * M_PI *
                                  std::exp(-4.0 * M_PI * M_PI * eps * eps))
                      .epsilon(1e-14));
  CHECK(l2_norm(grad_mollifier_action(SpectralField::unit(8, 1), eps)) == 0.0);
  CHECK_THROWS_AS(grad_mollifier_action(SpectralField::unit(8, 2), 0.0),
                  std::invalid_argument);

  // the L2 norm over sine modes peaks near k = 1/(2 pi eps sqrt(2))
  int best_k = 0;
  double best = 0.0;
  for (int k = 1; k <= 40; ++k) {
    const double v = l2_norm(grad_mollifier_action(SpectralField::unit(128, 2 * k), eps));
    if (v > best) {
      best = v;
      best_k = k;
    }
  }
  const double k_star = 1.0 / (2.0 * M_PI * eps * std::sqrt(2.0));
  CHECK(std::fabs(best_k - k_star) <= 1.0);

  // linearity and commutation with the heat flow
  const SpectralField f = random_field(24, 5);
  const SpectralField a = grad_mollifier_action(apply_heat(f, 0.02), eps);
  const SpectralField b = apply_heat(grad_mollifier_action(f, eps), 0.02);
  CHECK(max_abs_diff(a, b) < 1e-14);
}

TEST_CASE("bracket norms: uniform boundedness at the natural exponents") {
  // eps^{3/4} grad xi_eps: uniformly bounded and non-vanishing at alpha = 3/4
  std::vector<double> grad_vals, frac_vals;
  for (double eps : {0.1, 0.05, 0.025, 0.0125}) {
    grad_vals.push_back(bracket_norm(BracketKind::grad_mollified, 0.75, eps));
    frac_vals.push_back(bracket_norm(BracketKind::fractional_quarter, 0.5, eps));
  }
  auto ratio = [](const std::vector<double>& v) {
    double lo = 1e300, hi = 0.0;
    for (double x : v) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    return hi / lo;
  };
  CHECK(ratio(grad_vals) < 1.5);
  CHECK(ratio(frac_vals) < 1.5);
  for (double v : grad_vals) CHECK(v > 0.1);

  // scan stability: the supremum is attained well before the 10/eps cap
  const double eps = 0.05;
  double capped = 0.0;
  for (int n = 1; n <= int(std::ceil(10.0 / eps)); ++n)
    capped = std::max(capped, bracket_cell_value(BracketKind::grad_mollified, n, eps));
  double extended = capped;
  for (int n = int(std::ceil(10.0 / eps)) + 1; n <= int(std::ceil(20.0 / eps)); ++n)
    extended = std::max(extended, bracket_cell_value(BracketKind::grad_mollified, n, eps));
  CHECK(capped == extended);  // alpha = 0 cell values decay beyond the cap
}

TEST_CASE("bracket cell values agree with Monte Carlo") {
  // || eps^{3/4} int_window e_n d(grad xi_eps) ||_{L2} via direct sampling
  const int k = 20000;
  for (auto [eps, n] : {std::pair<double, int>{0.1, 2}, {0.05, 5}, {0.2, 4}}) {
    const int m = 64;
    const SpectralField h = grad_mollifier_action(SpectralField::unit(m, n), eps);
    const double window = 1.0 / double(n * n);
    RngStream s{555, std::uint64_t(n), 0};
    double sum2 = 0.0;
    for (int i = 0; i < k; ++i) {
      const BrownianIncrements inc = sample_increments(s, m, window);
      const double v = std::pow(eps, 0.75) * white_noise_pairing(h, inc);
      sum2 += v * v;
    }
    const double mc = std::sqrt(sum2 / k);
    const double exact = bracket_cell_value(BracketKind::grad_mollified, n, eps);
    // dominated by chi^2 fluctuations of the second moment
    CHECK(std::fabs(mc / exact - 1.0) < 3.0 / std::sqrt(2.0 * k));
  }
}

TEST_CASE("bracket norm input validation") {
  CHECK_THROWS_AS(bracket_norm(BracketKind::grad_mollified, 0.75, -0.1),
                  std::invalid_argument);
}
