#include "conekit/scalar1d.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "conekit/errors.hpp"

namespace conekit {

namespace {

constexpr double kBoundaryTol = 1e-14;

void require_degree(int n) {
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
}

void require_jacobi(double a, double b) {
  if (!(a > -1.0) || !(b > -1.0)) {
    std::ostringstream os;
    os << "Jacobi parameters must exceed -1 (got " << a << ", " << b << ")";
    throw ParameterDomainError(os.str());
  }
}

void require_gegenbauer(double lambda) {
  if (!(lambda > -0.5)) throw ParameterDomainError("Gegenbauer parameter must exceed -1/2");
}

void require_laguerre(double a) {
  if (!(a > -1.0)) throw ParameterDomainError("Laguerre parameter must exceed -1");
}

double gegenbauer_c_raw(int n, double lambda, double x) {
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = 2.0 * lambda * x;
  for (int k = 1; k < n; ++k) {
    double p2 = (2.0 * (k + lambda) * x * p1 - (k + 2.0 * lambda - 1.0) * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

struct Recurrence {
  std::vector<double> alpha;
  std::vector<double> beta;
};

Recurrence jacobi_recurrence(double a, double b, int m) {
  Recurrence r;
  r.alpha.resize(m);
  r.beta.resize(m + 1);
  for (int k = 0; k < m; ++k) {
    if (k == 0) {
      r.alpha[k] = (b - a) / (a + b + 2.0);
    } else {
      double s = 2.0 * k + a + b;
      r.alpha[k] = (b * b - a * a) / (s * (s + 2.0));
    }
  }
  r.beta[0] = 1.0;
  for (int k = 1; k <= m; ++k) {
    if (k == 1) {
      r.beta[k] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
    } else {
      double s = 2.0 * k + a + b;
      r.beta[k] = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
  return r;
}

Recurrence laguerre_recurrence(double a, int m) {
  Recurrence r;
  r.alpha.resize(m);
  r.beta.resize(m + 1);
  for (int k = 0; k < m; ++k) r.alpha[k] = 2.0 * k + a + 1.0;
  r.beta[0] = 1.0;
  for (int k = 1; k <= m; ++k) r.beta[k] = k * (k + a);
  return r;
}

// orthonormal p_m, its derivative, and sum_{k<m} p_k^2 at x
void orthonormal_at(const Recurrence& r, int m, double x, double& pm, double& dpm,
                    double& sumsq) {
  double p_prev = 0.0, p = 1.0, dp_prev = 0.0, dp = 0.0;
  sumsq = 1.0;
  for (int k = 0; k < m; ++k) {
    double sb = std::sqrt(r.beta[k + 1]);
    double sbk = k == 0 ? 0.0 : std::sqrt(r.beta[k]);
    double p_next = ((x - r.alpha[k]) * p - sbk * p_prev) / sb;
    double dp_next = (p + (x - r.alpha[k]) * dp - sbk * dp_prev) / sb;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
    if (k + 1 < m) sumsq += p * p;
  }
  pm = p;
  dpm = dp;
}

QuadRule1D golub_welsch(const Recurrence& r, int m, const WeightSpec& spec) {
  Eigen::VectorXd diag(m), sub(std::max(m - 1, 0));
  for (int k = 0; k < m; ++k) diag[k] = r.alpha[k];
  for (int k = 0; k + 1 < m; ++k) sub[k] = std::sqrt(r.beta[k + 1]);
  std::vector<double> nodes(m);
  if (m == 1) {
    nodes[0] = diag[0];
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericError("tridiagonal eigen-solve failed", 0);
    for (int i = 0; i < m; ++i) nodes[i] = es.eigenvalues()[i];
  }
  QuadRule1D rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    double x = nodes[i];
    double pm = 0.0, dpm = 0.0, sumsq = 1.0;
    bool converged = false;
    for (int it = 0; it < 30; ++it) {
      orthonormal_at(r, m, x, pm, dpm, sumsq);
      if (dpm == 0.0 || !std::isfinite(dpm)) break;
      double dx = pm / dpm;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      orthonormal_at(r, m, x, pm, dpm, sumsq);
      if (!std::isfinite(x) || std::abs(pm / dpm) > 1e-12 * std::max(1.0, std::abs(x))) {
        std::ostringstream os;
        os << "Gauss node " << i << " did not converge";
        throw NumericError(os.str(), i);
      }
    }
    orthonormal_at(r, m, x, pm, dpm, sumsq);
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / sumsq;
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rule.nodes[a] < rule.nodes[b]; });
  QuadRule1D sorted;
  for (std::size_t i : order) {
    sorted.nodes.push_back(rule.nodes[i]);
    sorted.weights.push_back(rule.weights[i]);
  }
  sorted.exact_degree = 2 * m - 1;
  sorted.normalized = true;
  sorted.weight = spec;
  return sorted;
}

}  // namespace

WeightSpec WeightSpec::jacobi(double a, double b) {
  return WeightSpec{WeightFamily::jacobi, a, b};
}

WeightSpec WeightSpec::gegenbauer(double lambda) {
  return WeightSpec{WeightFamily::gegenbauer, lambda, 0.0};
}

WeightSpec WeightSpec::laguerre(double a) {
  return WeightSpec{WeightFamily::laguerre, a, 0.0};
}

void WeightSpec::validate() const {
  switch (family) {
    case WeightFamily::jacobi: require_jacobi(alpha, beta); break;
    case WeightFamily::gegenbauer: require_gegenbauer(alpha); break;
    case WeightFamily::laguerre: require_laguerre(alpha); break;
  }
}

double QuadRule1D::pairwise_sum(const std::vector<double>& v) {
  std::function<double(std::size_t, std::size_t)> rec = [&](std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
      double s = 0.0;
      for (std::size_t i = lo; i < hi; ++i) s += v[i];
      return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return rec(lo, mid) + rec(mid, hi);
  };
  return rec(0, v.size());
}

double pochhammer(double a, int n) {
  require_degree(n);
  if (n == 0) return 1.0;
  if (a + n <= 30.0) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + k;
    return p;
  }
  double prod = 1.0;
  int k = 0;
  while (k < n && a + k <= 0.0) {
    prod *= a + k;
    ++k;
  }
  if (prod == 0.0 || k == n) return prod;
  double b = a + k;
  return prod * std::exp(std::lgamma(b + (n - k)) - std::lgamma(b));
}

double binomial(double n, double k) {
  if (k < 0) return 0.0;
  double r = 1.0;
  int kk = static_cast<int>(std::lround(k));
  if (std::abs(k - kk) < 1e-12) {
    for (int i = 1; i <= kk; ++i) r *= (n - kk + i) / i;
    return r;
  }
  return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1));
}

double jacobi_constant(double a, double b) {
  require_jacobi(a, b);
  return std::exp(std::lgamma(a + b + 2.0) - std::lgamma(a + 1.0) - std::lgamma(b + 1.0));
}

double jacobi_constant_interval(double a, double b) {
  return jacobi_constant(a, b) / std::pow(2.0, a + b + 1.0);
}

double gegenbauer_constant(double lambda) {
  require_gegenbauer(lambda);
  return std::exp(std::lgamma(lambda + 1.0) - std::lgamma(0.5) - std::lgamma(lambda + 0.5));
}

double laguerre_constant(double a) {
  require_laguerre(a);
  return std::exp(-std::lgamma(a + 1.0));
}

double jacobi_p(int n, double a, double b, double x) {
  return jacobi_p_homogeneous(n, a, b, x, 1.0);
}

double jacobi_p_homogeneous(int n, double a, double b, double y, double s) {
  require_degree(n);
  require_jacobi(a, b);
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = (a + 1.0) * s + (a + b + 2.0) * (y - s) / 2.0;
  double s2 = s * s;
  for (int k = 1; k < n; ++k) {
    double sg = 2.0 * k + a + b;
    double c1 = 2.0 * (k + 1) * (k + a + b + 1.0) * sg;
    double c2 = (sg + 1.0) * ((sg + 2.0) * sg * y + (a * a - b * b) * s);
    double c3 = 2.0 * (k + a) * (k + b) * (sg + 2.0) * s2;
    double p2 = (c2 * p1 - c3 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double gegenbauer_c(int n, double lambda, double x) {
  require_degree(n);
  require_gegenbauer(lambda);
  if (lambda == 0.0 && n > 0)
    throw ParameterDomainError("C_n^0 is degenerate; use the Z_n^0 Chebyshev branch");
  return gegenbauer_c_raw(n, lambda, x);
}

double chebyshev_t(int n, double x) {
  require_degree(n);
  if (n == 0) return 1.0;
  double p0 = 1.0, p1 = x;
  for (int k = 1; k < n; ++k) {
    double p2 = 2.0 * x * p1 - p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double gegenbauer_z(int n, double lambda, double x) {
  return gegenbauer_z_homogeneous(n, lambda, x, 1.0);
}

double gegenbauer_z_homogeneous(int n, double lambda, double a, double b) {
  require_degree(n);
  require_gegenbauer(lambda);
  if (n == 0) return 1.0;
  double b2 = b * b;
  if (lambda == 0.0) {
    double p0 = 1.0, p1 = a;
    for (int k = 1; k < n; ++k) {
      double p2 = 2.0 * a * p1 - b2 * p0;
      p0 = p1;
      p1 = p2;
    }
    return 2.0 * p1;
  }
  double p0 = 1.0, p1 = 2.0 * lambda * a;
  for (int k = 1; k < n; ++k) {
    double p2 = (2.0 * (k + lambda) * a * p1 - (k + 2.0 * lambda - 1.0) * b2 * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return (n + lambda) / lambda * p1;
}

double laguerre_l(int n, double a, double x) {
  require_degree(n);
  require_laguerre(a);
  if (n == 0) return 1.0;
  double p0 = 1.0, p1 = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    double p2 = ((2.0 * k + 1.0 + a - x) * p1 - (k + a) * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double eval_classical(const WeightSpec& spec, int n, double x) {
  spec.validate();
  switch (spec.family) {
    case WeightFamily::jacobi: return jacobi_p(n, spec.alpha, spec.beta, x);
    case WeightFamily::gegenbauer: return gegenbauer_c(n, spec.alpha, x);
    case WeightFamily::laguerre: return laguerre_l(n, spec.alpha, x);
  }
  return 0.0;
}

double jacobi_norm(int n, double a, double b) {
  require_degree(n);
  require_jacobi(a, b);
  if (n == 0) return 1.0;
  double h = 1.0;
  for (int k = 0; k < n; ++k) h *= (a + 1.0 + k) * (b + 1.0 + k) / ((k + 1.0) * (a + b + 2.0 + k));
  return h * (a + b + n + 1.0) / (a + b + 2.0 * n + 1.0);
}

double gegenbauer_norm(int n, double lambda) {
  require_degree(n);
  require_gegenbauer(lambda);
  if (n == 0) return 1.0;
  if (lambda == 0.0)
    throw ParameterDomainError("h_n^0 is degenerate; use the Jacobi(-1/2,-1/2) norm");
  double c1 = 1.0;
  for (int k = 0; k < n; ++k) c1 *= (2.0 * lambda + k) / (k + 1.0);
  return lambda / (n + lambda) * c1;
}

double laguerre_norm(int n, double a) {
  require_degree(n);
  require_laguerre(a);
  double h = 1.0;
  for (int k = 0; k < n; ++k) h *= (a + 1.0 + k) / (k + 1.0);
  return h;
}

double norm_classical(const WeightSpec& spec, int n) {
  spec.validate();
  switch (spec.family) {
    case WeightFamily::jacobi: return jacobi_norm(n, spec.alpha, spec.beta);
    case WeightFamily::gegenbauer: return gegenbauer_norm(n, spec.alpha);
    case WeightFamily::laguerre: return laguerre_norm(n, spec.alpha);
  }
  return 0.0;
}

std::vector<double> jacobi_coefficients(int n, double a, double b) {
  require_degree(n);
  require_jacobi(a, b);
  std::vector<double> p0{1.0};
  if (n == 0) return p0;
  std::vector<double> p1{(a + 1.0) - (a + b + 2.0) / 2.0, (a + b + 2.0) / 2.0};
  for (int k = 1; k < n; ++k) {
    double sg = 2.0 * k + a + b;
    double c1 = 2.0 * (k + 1) * (k + a + b + 1.0) * sg;
    double cx = (sg + 1.0) * (sg + 2.0) * sg;
    double c0 = (sg + 1.0) * (a * a - b * b);
    double c3 = 2.0 * (k + a) * (k + b) * (sg + 2.0);
    std::vector<double> p2(k + 2, 0.0);
    for (int i = 0; i <= k; ++i) {
      p2[i + 1] += cx * p1[i];
      p2[i] += c0 * p1[i];
    }
    for (int i = 0; i < k; ++i) p2[i] -= c3 * p0[i];
    for (double& c : p2) c /= c1;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

std::vector<double> shifted_jacobi_coefficients(int n, double a, double b) {
  require_degree(n);
  require_jacobi(a, b);
  std::vector<double> c(n + 1);
  double c0 = 1.0;
  for (int j = 1; j <= n; ++j) c0 *= (a + j) / j;
  c[0] = c0;
  for (int k = 0; k < n; ++k)
    c[k + 1] = c[k] * (k - n) * (n + a + b + 1.0 + k) / ((a + 1.0 + k) * (k + 1.0));
  return c;
}

std::vector<double> laguerre_coefficients(int n, double a) {
  require_degree(n);
  require_laguerre(a);
  std::vector<double> c(n + 1);
  c[0] = laguerre_norm(n, a);
  for (int k = 0; k < n; ++k) c[k + 1] = c[k] * (k - n) / ((a + 1.0 + k) * (k + 1.0));
  return c;
}

std::vector<double> gegenbauer_coefficients(int n, double lambda) {
  require_degree(n);
  require_gegenbauer(lambda);
  std::vector<double> p0{1.0};
  if (n == 0) return p0;
  std::vector<double> p1{0.0, 2.0 * lambda};
  for (int k = 1; k < n; ++k) {
    std::vector<double> p2(k + 2, 0.0);
    for (int i = 0; i <= k; ++i) p2[i + 1] += 2.0 * (k + lambda) * p1[i] / (k + 1.0);
    for (int i = 0; i < k; ++i) p2[i] -= (k + 2.0 * lambda - 1.0) * p0[i] / (k + 1.0);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

QuadRule1D gauss_rule(const WeightSpec& spec, int m) {
  if (m < 1) throw ParameterDomainError("Gauss rule needs at least one node");
  spec.validate();
  using Key = std::tuple<int, double, double, int>;
  static std::mutex mutex;
  static std::map<Key, QuadRule1D> cache;
  Key key{static_cast<int>(spec.family), spec.alpha, spec.beta, m};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  QuadRule1D rule;
  switch (spec.family) {
    case WeightFamily::jacobi:
      rule = golub_welsch(jacobi_recurrence(spec.alpha, spec.beta, m), m, spec);
      break;
    case WeightFamily::gegenbauer:
      rule = golub_welsch(jacobi_recurrence(spec.alpha - 0.5, spec.alpha - 0.5, m), m, spec);
      for (std::size_t i = 0; i < rule.nodes.size() / 2; ++i) {
        std::size_t j = rule.nodes.size() - 1 - i;
        double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        double w = 0.5 * (rule.weights[j] + rule.weights[i]);
        rule.nodes[i] = -x;
        rule.nodes[j] = x;
        rule.weights[i] = rule.weights[j] = w;
      }
      if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
      break;
    case WeightFamily::laguerre:
      rule = golub_welsch(laguerre_recurrence(spec.alpha, m), m, spec);
      break;
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, rule);
  return rule;
}

QuadRule1D gegenbauer_measure(double lambda, int m) {
  if (std::abs(lambda + 0.5) < kBoundaryTol) {
    QuadRule1D rule;
    rule.nodes = {-1.0, 1.0};
    rule.weights = {0.5, 0.5};
    rule.exact_degree = kAllDegrees;
    rule.weight = WeightSpec{WeightFamily::gegenbauer, -0.5, 0.0};
    return rule;
  }
  return gauss_rule(WeightSpec::gegenbauer(lambda), m);
}

QuadRule1D jacobi_measure(double a, double b, int m) {
  bool left = std::abs(b + 1.0) < kBoundaryTol;
  bool right = std::abs(a + 1.0) < kBoundaryTol;
  if (left && right) throw ParameterDomainError("Jacobi measure with both exponents at -1");
  if (left || right) {
    QuadRule1D rule;
    rule.nodes = {left ? -1.0 : 1.0};
    rule.weights = {1.0};
    rule.exact_degree = kAllDegrees;
    rule.weight = WeightSpec{WeightFamily::jacobi, a, b};
    return rule;
  }
  return gauss_rule(WeightSpec::jacobi(a, b), m);
}

std::vector<double> cesaro_weights(int n, double delta) {
  require_degree(n);
  if (delta < 0.0) throw ParameterDomainError("Cesaro order must be non-negative");
  std::vector<double> w(n + 1);
  w[0] = 1.0;
  for (int k = 1; k <= n; ++k) w[k] = w[k - 1] * (n - k + 1.0) / (n - k + 1.0 + delta);
  return w;
}

double jacobi_kernel(int n, double a, double b, double u, double v, std::optional<double> delta) {
  require_degree(n);
  require_jacobi(a, b);
  std::vector<double> cw = delta ? cesaro_weights(n, *delta) : std::vector<double>(n + 1, 1.0);
  double pu0 = 1.0, pv0 = 1.0;
  double sum = cw[0];
  if (n == 0) return sum;
  double pu1 = (a + 1.0) + (a + b + 2.0) * (u - 1.0) / 2.0;
  double pv1 = (a + 1.0) + (a + b + 2.0) * (v - 1.0) / 2.0;
  double prod = 1.0;
  for (int k = 1; k <= n; ++k) {
    prod *= (a + k) * (b + k) / (k * (a + b + 1.0 + k));
    double hk = prod * (a + b + k + 1.0) / (a + b + 2.0 * k + 1.0);
    sum += cw[k] * pu1 * pv1 / hk;
    if (k == n) break;
    double sg = 2.0 * k + a + b;
    double c1 = 2.0 * (k + 1) * (k + a + b + 1.0) * sg;
    double c3 = 2.0 * (k + a) * (k + b) * (sg + 2.0);
    double cu = (sg + 1.0) * ((sg + 2.0) * sg * u + a * a - b * b);
    double cv = (sg + 1.0) * ((sg + 2.0) * sg * v + a * a - b * b);
    double pu2 = (cu * pu1 - c3 * pu0) / c1;
    double pv2 = (cv * pv1 - c3 * pv0) / c1;
    pu0 = pu1;
    pu1 = pu2;
    pv0 = pv1;
    pv1 = pv2;
  }
  return sum;
}

double gegenbauer_coefficient(const std::function<double(double)>& g, int n, double lambda,
                              const QuadRule1D& rule) {
  require_degree(n);
  require_gegenbauer(lambda);
  const WeightSpec& w = rule.weight;
  bool match = false;
  if (w.family == WeightFamily::gegenbauer) match = std::abs(w.alpha - lambda) < kBoundaryTol;
  if (w.family == WeightFamily::jacobi)
    match = std::abs(w.alpha - (lambda - 0.5)) < kBoundaryTol &&
            std::abs(w.beta - (lambda - 0.5)) < kBoundaryTol;
  if (!match) throw ConfigurationError("quadrature rule does not match the Gegenbauer weight");
  double z1 = gegenbauer_z(n, lambda, 1.0);
  return rule.integrate([&](double u) { return g(u) * gegenbauer_z(n, lambda, u) / z1; });
}

double index_raise_residual(double lambda, double sigma, int m, double t) {
  require_degree(m);
  if (!(lambda >= 0.0) || !(sigma > 0.0))
    throw ParameterDomainError("index raising needs lambda >= 0 and sigma > 0");
  QuadRule1D r1 = jacobi_measure(lambda, sigma - 1.0, m + 1);
  QuadRule1D r2 = gegenbauer_measure(sigma, m + 1);
  double lhs = gegenbauer_z(m, lambda, t);
  double rhs = r1.integrate([&](double z1) {
    return r2.integrate([&](double z2) {
      return gegenbauer_z(m, lambda + sigma, 0.5 * (1.0 - z1) * t + 0.5 * (1.0 + z1) * z2);
    });
  });
  return std::abs(lhs - rhs);
}

double quadratic_transform_residual(double lambda, int n, double x) {
  require_degree(n);
  require_gegenbauer(lambda);
  double lhs = gegenbauer_c_raw(2 * n, lambda, x);
  double ratio = 1.0;
  for (int k = 0; k < n; ++k) ratio *= (lambda + k) / (0.5 + k);
  double rhs = ratio * jacobi_p(n, lambda - 0.5, -0.5, 2.0 * x * x - 1.0);
  return std::abs(lhs - rhs);
}

double verify_1d_identities(Identity1D kind, const IdentityArgs& args) {
  switch (kind) {
    case Identity1D::index_raise:
      return index_raise_residual(args.lambda, args.sigma, args.degree, args.point);
    case Identity1D::quadratic_transform:
      return quadratic_transform_residual(args.lambda, args.degree, args.point);
  }
  return 0.0;
}

}  // namespace conekit
