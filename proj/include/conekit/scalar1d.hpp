#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace conekit {

enum class WeightFamily { jacobi, gegenbauer, laguerre };

// alpha holds the Jacobi alpha, the Gegenbauer lambda or the Laguerre alpha.
struct WeightSpec {
  WeightFamily family = WeightFamily::jacobi;
  double alpha = 0.0;
  double beta = 0.0;

  static WeightSpec jacobi(double a, double b);
  static WeightSpec gegenbauer(double lambda);
  static WeightSpec laguerre(double a);

  void validate() const;
  bool operator==(const WeightSpec&) const = default;
};

inline constexpr int kAllDegrees = std::numeric_limits<int>::max();

struct QuadRule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exact_degree = 0;
  bool normalized = true;
  WeightSpec weight;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    std::vector<double> v(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) v[i] = weights[i] * f(nodes[i]);
    return pairwise_sum(v);
  }

  static double pairwise_sum(const std::vector<double>& v);
};

double pochhammer(double a, int n);
double binomial(double n, double k);

// normalization constants: c_{a,b} on [0,1], c'_{a,b} on [-1,1], c_lambda, c^L_a
double jacobi_constant(double a, double b);
double jacobi_constant_interval(double a, double b);
double gegenbauer_constant(double lambda);
double laguerre_constant(double a);

double jacobi_p(int n, double a, double b, double x);
double gegenbauer_c(int n, double lambda, double x);
double gegenbauer_z(int n, double lambda, double x);
double chebyshev_t(int n, double x);
double laguerre_l(int n, double a, double x);

// s^n P_n^{(a,b)}(y/s), valid at s = 0
double jacobi_p_homogeneous(int n, double a, double b, double y, double s);
// b^n Z_n^lambda(a/b), valid at b = 0
double gegenbauer_z_homogeneous(int n, double lambda, double a, double b);

double eval_classical(const WeightSpec& spec, int n, double x);

double jacobi_norm(int n, double a, double b);
double gegenbauer_norm(int n, double lambda);
double laguerre_norm(int n, double a);
double norm_classical(const WeightSpec& spec, int n);

// power-basis coefficients
std::vector<double> jacobi_coefficients(int n, double a, double b);
std::vector<double> shifted_jacobi_coefficients(int n, double a, double b);
std::vector<double> laguerre_coefficients(int n, double a);
std::vector<double> gegenbauer_coefficients(int n, double lambda);

QuadRule1D gauss_rule(const WeightSpec& spec, int m);

// normalized measures on [-1,1]; boundary parameters give the limit rules
QuadRule1D gegenbauer_measure(double lambda, int m);
QuadRule1D jacobi_measure(double a, double b, int m);

// A^delta_{n-k} / A^delta_n for k = 0..n
std::vector<double> cesaro_weights(int n, double delta);

double jacobi_kernel(int n, double a, double b, double u, double v,
                     std::optional<double> delta = std::nullopt);

double gegenbauer_coefficient(const std::function<double(double)>& g, int n, double lambda,
                              const QuadRule1D& rule);

enum class Identity1D { index_raise, quadratic_transform };

struct IdentityArgs {
  double lambda = 1.0;
  double sigma = 0.5;
  int degree = 0;
  double point = 0.0;
};

double verify_1d_identities(Identity1D kind, const IdentityArgs& args);
double index_raise_residual(double lambda, double sigma, int m, double t);
double quadratic_transform_residual(double lambda, int n, double x);

}  // namespace conekit
