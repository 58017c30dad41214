#include "conekit/conebasis.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "conekit/errors.hpp"
#include "conekit/scalar1d.hpp"

namespace conekit {

namespace {

void require_basis_dim(const ConeParams& p) {
  if (p.d < 1 || p.d > 3) throw CapabilityError("cone bases are available for d in {1,2,3}");
}

BallBasisElement angular_element(const ConeParams& p, int m, int inner) {
  if (p.is_surface()) {
    HarmonicElement h = harmonic_basis(p.d, m).at(inner);
    BallBasisElement e;
    e.d = p.d;
    e.mu = 0.0;
    e.n = m;
    e.m = 0;
    e.ell = inner;
    e.norm_factor = 1.0;
    e.poly = h.poly;
    return e;
  }
  if (p.d == 1) return segment_basis(p.mu, m).front();
  return ball_basis(p.d, p.mu, m).at(inner);
}

}  // namespace

double ConeBasisElement::radial(double t) const {
  if (params.is_laguerre()) return laguerre_l(n - m, radial_a, t);
  return jacobi_p(n - m, radial_a, radial_b, 1.0 - 2.0 * t);
}

double ConeBasisElement::angular(const ConePoint& p) const {
  return angular_factor.evaluate_homogeneous(p.x, p.t);
}

int inner_count(const ConeParams& params, int m) {
  if (m < 0) return 0;
  if (params.is_surface()) return harmonic_dimension(params.d, m);
  if (params.d == 1) return 1;
  return static_cast<int>(std::lround(binomial(m + params.d - 1.0, m)));
}

int degree_count(const ConeParams& params, int n) {
  int c = 0;
  for (int m = 0; m <= n; ++m) c += inner_count(params, m);
  return c;
}

double basis_norm(const ConeParams& params, int n, int m) {
  params.validate();
  if (m < 0 || m > n) throw IndexError("basis norm needs 0 <= m <= n");
  double a = params.radial_exponent();
  if (params.is_laguerre()) return pochhammer(a + 1.0, 2 * m) * laguerre_norm(n - m, a + 2.0 * m);
  double g = params.gamma;
  return jacobi_constant(a, g) / jacobi_constant(a + 2.0 * m, g) * jacobi_norm(n - m, a + 2.0 * m, g);
}

ConeBasisElement basis_element(const ConeParams& params, int n, int m, int inner) {
  params.validate();
  require_basis_dim(params);
  if (m < 0 || m > n) throw IndexError("basis element needs 0 <= m <= n");
  if (inner < 0 || inner >= inner_count(params, m)) throw IndexError("inner index out of range");
  ConeBasisElement e;
  e.params = params;
  e.n = n;
  e.m = m;
  e.inner = inner;
  e.norm = basis_norm(params, n, m);
  e.radial_a = params.radial_exponent() + 2.0 * m;
  e.radial_b = params.gamma;
  e.angular_factor = angular_element(params, m, inner);
  std::vector<double> rc = params.is_laguerre()
                               ? laguerre_coefficients(n - m, e.radial_a)
                               : shifted_jacobi_coefficients(n - m, e.radial_a, e.radial_b);
  MVPoly rad = compose_univariate(rc, MVPoly::variable(params.d, Variable::t()));
  e.poly = rad * homogenize_ball_poly(e.angular_factor.poly, m);
  return e;
}

ConeBasis::ConeBasis(const ConeParams& params, int max_degree)
    : params_(params), max_degree_(max_degree) {
  params.validate();
  require_basis_dim(params);
  if (max_degree < 0) throw ParameterDomainError("degree must be non-negative");
  for (int n = 0; n <= max_degree; ++n) {
    offsets_.push_back(elements_.size());
    for (int m = 0; m <= n; ++m)
      for (int k = 0; k < inner_count(params, m); ++k)
        elements_.push_back(basis_element(params, n, m, k));
  }
  offsets_.push_back(elements_.size());
}

std::pair<std::size_t, std::size_t> ConeBasis::degree_range(int n) const {
  if (n < 0 || n > max_degree_) throw IndexError("degree outside the basis");
  return {offsets_[n], offsets_[n + 1]};
}

void ConeBasis::evaluate_all(const ConePoint& p, std::vector<double>& out) const {
  out.resize(elements_.size());
  // angular factors depend on (m, inner) only; they are first met at n = m
  std::vector<std::vector<double>> ang(max_degree_ + 1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const ConeBasisElement& e = elements_[i];
    auto& row = ang[e.m];
    if (e.n == e.m) row.push_back(e.angular(p));
    out[i] = e.radial(p.t) * row[e.inner];
  }
}

std::shared_ptr<const ConeBasis> cached_basis(const ConeParams& params, int max_degree) {
  using Key = std::tuple<int, double, double, double, int, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const ConeBasis>> cache;
  Key key{params.d, params.mu, params.beta, params.gamma, static_cast<int>(params.family), max_degree};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto basis = std::make_shared<const ConeBasis>(params, max_degree);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, basis);
  return basis;
}

Eigen::MatrixXd gram_matrix(const ConeParams& params, int max_degree, const DomainRule& rule) {
  if (!(rule.params == params)) throw ConfigurationError("domain rule was built for different parameters");
  if (rule.exact_degree < 2 * max_degree)
    throw ConfigurationError("domain rule is not exact to degree 2n");
  auto basis = cached_basis(params, max_degree);
  const auto& els = basis->elements();
  Eigen::MatrixXd v(rule.size(), els.size());
  std::vector<double> vals;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    basis->evaluate_all(rule.points[i], vals);
    double sw = std::sqrt(rule.weights[i]);
    for (std::size_t j = 0; j < els.size(); ++j) v(i, j) = sw * vals[j] / std::sqrt(els[j].norm);
  }
  return v.transpose() * v;
}

}  // namespace conekit
