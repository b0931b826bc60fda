#pragma once

#include <string>

#include "sgmc/spectral.hpp"

namespace sgmc {

/// Coefficient g with bounded derivatives of order 1..3.  Families:
/// zero, constant(c), linear (g(u)=u), sine(a) (g(u)=sin(a u)),
/// tanh_smooth(a) (g(u)=tanh(a u)).
struct Nonlinearity {
  enum class Family { zero, constant, linear, sine, tanh_smooth };

  Family family = Family::zero;
  double param = 0.0;

  double g(double u) const;
  double gprime(double u) const;
  double gprime_g(double u) const { return gprime(u) * g(u); }

  static Nonlinearity zero() { return {Family::zero, 0.0}; }
  static Nonlinearity constant(double c) { return {Family::constant, c}; }
  static Nonlinearity linear() { return {Family::linear, 1.0}; }
  static Nonlinearity sine(double a) { return {Family::sine, a}; }
  static Nonlinearity tanh_smooth(double a) { return {Family::tanh_smooth, a}; }
  static Nonlinearity parse(const std::string& name, double param);
  std::string name() const;
};

/// Initial condition psi, 1/4-Hoelder for every family.
/// weierstrass_quarter(a, depth) = sum_{j<=depth} a 2^{-j/4} cos(2 pi 2^j x).
struct InitialCondition {
  enum class Family { constant, smooth_sine, weierstrass_quarter };

  Family family = Family::constant;
  double amplitude = 0.0;
  int index = 1;  // wavenumber for smooth_sine, depth for weierstrass

  double eval(double x) const;

  /// Exact spectral sampling by the discrete transform at >= 4x oversampling.
  SpectralField sample_spectral(int mode_cutoff) const;

  static InitialCondition constant(double c) { return {Family::constant, c, 0}; }
  static InitialCondition smooth_sine(double a, int k) {
    return {Family::smooth_sine, a, k};
  }
  static InitialCondition weierstrass_quarter(double a, int depth) {
    return {Family::weierstrass_quarter, a, depth};
  }
  static InitialCondition parse(const std::string& name, double a, int index);
  std::string name() const;
};

/// Pointwise Gauss-Legendre value of int_0^1 g'(theta a + (1-theta) b) dtheta.
double averaged_derivative_value(double a, double b, const Nonlinearity& g);

/// Grid version of the averaged derivative G_{s,r}.
GridField averaged_derivative(const GridField& u_r, const GridField& pu_s,
                              const Nonlinearity& g);

}  // namespace sgmc
