#include "sgmc/nonlinearity.hpp"

#include <cmath>
#include <stdexcept>

namespace sgmc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

// 16-node Gauss-Legendre on [0,1]; exact to ~1e-15 for the built-in g.
constexpr int kGlN = 16;
constexpr double kGlNode[kGlN] = {
    0.0052995325041750337, 0.0277124884633837046, 0.0671843988060841224,
    0.1222977958224984868, 0.1910618777986781147, 0.2709916111713863151,
    0.3591982246103705422, 0.4524937450811812866, 0.5475062549188187134,
    0.6408017753896294578, 0.7290083888286136849, 0.8089381222013218853,
    0.8777022041775015132, 0.9328156011939158776, 0.9722875115366162954,
    0.9947004674958249663};
constexpr double kGlWeight[kGlN] = {
    0.0135762297058770482, 0.0311267619693239469, 0.0475792558412463928,
    0.0623144856277669384, 0.0747979944082883680, 0.0845782596975012679,
    0.0913017075224617918, 0.0947253052275342510, 0.0947253052275342510,
    0.0913017075224617918, 0.0845782596975012679, 0.0747979944082883680,
    0.0623144856277669384, 0.0475792558412463928, 0.0311267619693239469,
    0.0135762297058770482};
}  // namespace

double Nonlinearity::g(double u) const {
  switch (family) {
    case Family::zero: return 0.0;
    case Family::constant: return param;
    case Family::linear: return u;
    case Family::sine: return std::sin(param * u);
    case Family::tanh_smooth: return std::tanh(param * u);
  }
  return 0.0;
}

double Nonlinearity::gprime(double u) const {
  switch (family) {
    case Family::zero:
    case Family::constant: return 0.0;
    case Family::linear: return 1.0;
    case Family::sine: return param * std::cos(param * u);
    case Family::tanh_smooth: {
      const double c = std::cosh(param * u);
      return param / (c * c);
    }
  }
  return 0.0;
}

Nonlinearity Nonlinearity::parse(const std::string& name, double param) {
  if (name == "zero") return zero();
  if (name == "constant") return constant(param);
  if (name == "linear") return linear();
  if (name == "sine") return sine(param);
  if (name == "tanh-smooth" || name == "tanh_smooth") return tanh_smooth(param);
  throw std::invalid_argument("unknown nonlinearity family: " + name);
}

std::string Nonlinearity::name() const {
  switch (family) {
    case Family::zero: return "zero";
    case Family::constant: return "constant";
    case Family::linear: return "linear";
    case Family::sine: return "sine";
    case Family::tanh_smooth: return "tanh-smooth";
  }
  return "?";
}

double InitialCondition::eval(double x) const {
  switch (family) {
    case Family::constant: return amplitude;
    case Family::smooth_sine:
      return amplitude * std::sqrt(2.0) * std::sin(kTwoPi * index * x);
    case Family::weierstrass_quarter: {
      double acc = 0.0;
      double freq = 1.0, amp = amplitude;
      for (int j = 0; j <= index; ++j) {
        acc += amp * std::cos(kTwoPi * freq * x);
        freq *= 2.0;
        amp *= std::pow(2.0, -0.25);
      }
      return acc;
    }
  }
  return 0.0;
}

SpectralField InitialCondition::sample_spectral(int mode_cutoff) const {
  int n = grid_size_for(mode_cutoff);
  SpectralTransform tr(mode_cutoff, n);
  GridField grid(n);
  for (int i = 0; i < n; ++i) grid.values[i] = eval(double(i) / n);
  return tr.analyze(grid);
}

InitialCondition InitialCondition::parse(const std::string& name, double a, int index) {
  if (name == "constant") return constant(a);
  if (name == "smooth-sine" || name == "smooth_sine") return smooth_sine(a, index);
  if (name == "weierstrass-quarter" || name == "weierstrass_quarter")
    return weierstrass_quarter(a, index);
  throw std::invalid_argument("unknown initial condition family: " + name);
}

std::string InitialCondition::name() const {
  switch (family) {
    case Family::constant: return "constant";
    case Family::smooth_sine: return "smooth-sine";
    case Family::weierstrass_quarter: return "weierstrass-quarter";
  }
  return "?";
}

double averaged_derivative_value(double a, double b, const Nonlinearity& g) {
  double acc = 0.0;
  for (int i = 0; i < kGlN; ++i)
    acc += kGlWeight[i] * g.gprime(kGlNode[i] * a + (1.0 - kGlNode[i]) * b);
  return acc;
}

GridField averaged_derivative(const GridField& u_r, const GridField& pu_s,
                              const Nonlinearity& g) {
  if (u_r.size() != pu_s.size())
    throw std::invalid_argument("averaged_derivative: grid size mismatch");
  GridField out(u_r.size());
  for (int i = 0; i < u_r.size(); ++i)
    out.values[i] = averaged_derivative_value(u_r.values[i], pu_s.values[i], g);
  return out;
}

}  // namespace sgmc
