#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sgmc/rng.hpp"
#include "sgmc/sewing.hpp"
#include "sgmc/stats.hpp"

using namespace sgmc;

namespace {

SewingPathContext bm_context(int max_level, std::uint64_t seed, std::uint64_t path) {
  SewingPathContext ctx;
  ctx.max_level = max_level;
  const int pts = ctx.points();
  const double sh = std::sqrt(1.0 / double(1 << max_level));
  ctx.scalar.resize(pts);
  ctx.scalar[0] = 0.0;
  for (int i = 1; i < pts; ++i)
    ctx.scalar[i] = ctx.scalar[i - 1] + sh * normal_draw(seed, path, i - 1, 0);
  return ctx;
}

}  // namespace

TEST_CASE("additive germs are fixed points of sew at every level") {
  auto h = [](double t) { return std::sin(3.0 * t) + t * t; };
  const Germ germ = additive_germ(h);
  SewingPathContext ctx;
  ctx.max_level = 10;
  for (int level : {2, 5, 10}) {
    const SewnPath sp = sew(germ, ctx, level);
    for (std::size_t i = 0; i < sp.values.size(); ++i) {
      const double t = double(i) / double(1 << level);
      CHECK(sp.values[i] == doctest::Approx(h(t) - h(0.0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("deterministic power germ: dyadic bookkeeping") {
  // A_{s,t} = (t-s)^{5/8}: the level-L sum is 2^L (2^{-L})^{5/8} = 2^{3L/8}
  Germ germ;
  germ.beta1 = 0.625;
  germ.eval = [](const SewingPathContext& ctx, int i, int j) {
    return std::pow(ctx.time_of(j) - ctx.time_of(i), 0.625);
  };
  SewingPathContext ctx;
  ctx.max_level = 12;
  for (int level : {4, 8, 12}) {
    const SewnPath sp = sew(germ, ctx, level);
    CHECK(sp.values.back() ==
          doctest::Approx(std::pow(2.0, 0.375 * level)).epsilon(1e-12));
  }
}

TEST_CASE("Ito germ sews to the stochastic integral") {
  const int max_level = 12;
  const int paths = 128;
  const Germ germ = ito_bm_germ();
  std::vector<double> err_l2;
  std::vector<SewingPathContext> ctxs;
  for (int p = 0; p < paths; ++p) ctxs.push_back(bm_context(max_level, 40, p));
  for (int level : {6, 8, 10, 12}) {
    double sq = 0.0;
    for (int p = 0; p < paths; ++p) {
      const SewnPath sp = sew(germ, ctxs[p], level);
      const double w1 = ctxs[p].scalar.back();
      const double e = sp.values.back() - 0.5 * (w1 * w1 - 1.0);
      sq += e * e;
    }
    err_l2.push_back(std::sqrt(sq / paths));
  }
  // left-point Riemann rate 2^{-L/2}: error halves every two levels
  for (std::size_t i = 1; i < err_l2.size(); ++i) {
    const double ratio = err_l2[i] / err_l2[i - 1];
    CHECK(ratio > 0.30);
    CHECK(ratio < 0.75);
  }
}

TEST_CASE("characterization: construction passes, drift injection fails") {
  const int max_level = 10;
  const int paths = 128;
  const Germ germ = ito_bm_germ();
  std::vector<SewingPathContext> ctxs;
  std::vector<SewnPath> sewn;
  for (int p = 0; p < paths; ++p) {
    ctxs.push_back(bm_context(max_level, 41, p));
    sewn.push_back(sew(germ, ctxs.back(), max_level));
  }
  const CharacterizationReport ok = characterization_check(sewn, ctxs, germ, 5.0);
  CHECK(ok.pass);
  CHECK(ok.ratio_sup < 2.0);  // theoretical value 1/sqrt(2) plus MC noise

  std::vector<SewnPath> drifted = sewn;
  for (auto& sp : drifted)
    for (std::size_t i = 0; i < sp.values.size(); ++i)
      sp.values[i] += double(i) / double(sp.values.size() - 1);
  const CharacterizationReport bad = characterization_check(drifted, ctxs, germ, 5.0);
  CHECK_FALSE(bad.pass);
  CHECK(bad.mean_sup > 6.0);  // conditional-mean channel flags the drift
}

TEST_CASE("sew validates levels and reports failing cells") {
  Germ germ;
  germ.beta1 = 1.0;
  germ.eval = [](const SewingPathContext&, int i, int) {
    return i == 0 ? std::nan("") : 0.0;
  };
  SewingPathContext ctx;
  ctx.max_level = 4;
  CHECK_THROWS_AS(sew(germ, ctx, 6), std::invalid_argument);
  CHECK_THROWS_WITH_AS(sew(germ, ctx, 2), doctest::Contains("cell 0"),
                       std::runtime_error);
}
