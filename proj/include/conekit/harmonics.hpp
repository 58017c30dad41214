#pragma once

#include <vector>

#include "conekit/polyalg.hpp"

namespace conekit {

int harmonic_dimension(int d, int m);

// Solid harmonic of degree m, orthonormal under the normalized surface measure.
struct HarmonicElement {
  int d = 2;
  int m = 0;
  int ell = 0;  // 0-based position in the canonical order
  int order = 0;
  bool sine = false;
  double scale = 1.0;
  MVPoly poly{2};

  double evaluate(const std::vector<double>& x) const;
};

std::vector<HarmonicElement> harmonic_basis(int d, int m);

double harmonic_value(int d, int m, int ell, const std::vector<double>& x);

// all Y_ell^m(x) for one degree, in canonical order, by stable recurrence
std::vector<double> harmonic_values(int d, int m, const std::vector<double>& x);

// P_m^{(mu-1/2, n-2m+(d-2)/2)}(2|x|^2-1) Y_ell^{n-2m}(x), unit norm under the normalized ball weight.
// d = 1 is the Gegenbauer segment basis P_n^{(mu-1/2,mu-1/2)}(x).
struct BallBasisElement {
  int d = 2;
  double mu = 0.5;
  int n = 0;
  int m = 0;
  int ell = 0;
  double norm_factor = 1.0;
  MVPoly poly{2};

  double evaluate(const std::vector<double>& x) const { return evaluate_homogeneous(x, 1.0); }
  // t^n p(x/t), finite at t = 0
  double evaluate_homogeneous(const std::vector<double>& x, double t) const;
};

std::vector<BallBasisElement> ball_basis(int d, double mu, int n);
std::vector<BallBasisElement> segment_basis(double mu, int n);

double verify_addition(int d, int m, const std::vector<double>& x, const std::vector<double>& y);

// (Delta - <x,grad>^2 - (2mu+d-1)<x,grad>) u
MVPoly ball_operator(const MVPoly& u, double mu);

}  // namespace conekit
