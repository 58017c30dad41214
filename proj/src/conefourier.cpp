#include "conekit/conefourier.hpp"

#include <cmath>
#include <limits>

#include "conekit/conebasis.hpp"
#include "conekit/errors.hpp"

namespace conekit {

namespace {

constexpr int kMaxDoublings = 6;
constexpr double kRefineTol = 1e-4;

void require_rule(const ConeParams& params, const DomainRule& rule) {
  if (!(rule.params == params)) throw ConfigurationError("domain rule was built for different parameters");
}

std::vector<double> sample(const ConeFunction& f, const DomainRule& rule) {
  std::vector<double> v(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) v[i] = f(rule.points[i]);
  return v;
}

// P_n(p, q) or the weighted sum of them, by the closed route when it exists
double kernel_for(const ConeParams& params, int n, std::optional<double> delta, bool single,
                  const ConePoint& p, const ConePoint& q) {
  if (single) {
    if (params.is_laguerre()) return kernel_basis_sum(params, n, KernelKind::projection, p, q);
    return kernel_closed(params, n, p, q);
  }
  return summability_kernel(params, n, delta, p, q);
}

std::vector<double> degree_weights(int n, std::optional<double> delta) {
  return delta ? cesaro_weights(n, *delta) : std::vector<double>(n + 1, 1.0);
}

}  // namespace

void require_even(const EvenFunction& g) {
  for (int k = 0; k <= 32; ++k) {
    double u = k / 32.0 + (k % 3) * 1e-3;
    if (u > 1.0) u = 1.0;
    double a = g(u), b = g(-u);
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (!(std::abs(a - b) / 2.0 <= 1e-12 * scale))
      throw ContractViolation("translation needs an even function on [-1,1]");
  }
}

double translate(const EvenFunction& g, const ConePoint& p, const ConePoint& q,
                 const ConeParams& params, int order) {
  require_even(g);
  Translation tr(params, order);
  return tr.apply(g, p, q);
}

double lambda_coefficient(const EvenFunction& g, int n, const ConeParams& params, int nodes) {
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
  double lam = critical_index(params);
  int m = nodes > 0 ? nodes : std::max(2 * n + 2, 48);
  return gegenbauer_coefficient(g, 2 * n, lam, gauss_rule(WeightSpec::gegenbauer(lam), m));
}

std::vector<double> convolve(const ConeFunction& f, const EvenFunction& g, const ConeParams& params,
                             const DomainRule& rule, const std::vector<ConePoint>& points, int order) {
  require_rule(params, rule);
  require_even(g);
  Translation tr(params, order);
  std::vector<double> fv = sample(f, rule);
  std::vector<double> out(points.size());
  std::vector<double> terms(rule.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < rule.size(); ++j)
      terms[j] = rule.weights[j] * fv[j] * tr.apply(g, points[i], rule.points[j]);
    out[i] = QuadRule1D::pairwise_sum(terms);
  }
  return out;
}

double ExpansionCoefficients::evaluate(const ConePoint& p, std::optional<int> only_degree) const {
  auto basis = cached_basis(params, max_degree);
  std::vector<double> vals;
  basis->evaluate_all(p, vals);
  const auto& els = basis->elements();
  double s = 0.0;
  for (std::size_t i = 0; i < els.size(); ++i) {
    const auto& e = els[i];
    if (only_degree && e.n != *only_degree) continue;
    auto it = coeffs.find({e.n, e.m, e.inner});
    if (it != coeffs.end()) s += it->second * vals[i];
  }
  return s;
}

ExpansionCoefficients expand(const ConeFunction& f, int max_degree, const ConeParams& params,
                             const DomainRule& rule) {
  require_rule(params, rule);
  if (max_degree < 0) throw ParameterDomainError("degree must be non-negative");
  auto basis = cached_basis(params, max_degree);
  const auto& els = basis->elements();
  std::vector<double> fv = sample(f, rule);
  std::vector<std::vector<double>> terms(els.size(), std::vector<double>(rule.size()));
  std::vector<double> vals;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    basis->evaluate_all(rule.points[j], vals);
    for (std::size_t i = 0; i < els.size(); ++i) terms[i][j] = rule.weights[j] * fv[j] * vals[i];
  }
  ExpansionCoefficients ec;
  ec.params = params;
  ec.max_degree = max_degree;
  double captured = 0.0;
  for (std::size_t i = 0; i < els.size(); ++i) {
    double c = QuadRule1D::pairwise_sum(terms[i]) / els[i].norm;
    ec.coeffs[{els[i].n, els[i].m, els[i].inner}] = c;
    captured += c * c * els[i].norm;
  }
  double ff = rule.integrate([&](const ConePoint& p) {
    double v = f(p);
    return v * v;
  });
  ec.residual_norm = std::sqrt(std::max(0.0, ff - captured));
  return ec;
}

std::vector<double> project(const ConeFunction& f, int n, const ConeParams& params,
                            const DomainRule& rule, const std::vector<ConePoint>& points,
                            ProjectionRoute route) {
  require_rule(params, rule);
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
  std::vector<double> out(points.size());
  if (route == ProjectionRoute::coefficients) {
    ExpansionCoefficients ec = expand(f, n, params, rule);
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = ec.evaluate(points[i], n);
    return out;
  }
  std::vector<double> fv = sample(f, rule);
  std::vector<double> terms(rule.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < rule.size(); ++j)
      terms[j] = rule.weights[j] * fv[j] * kernel_for(params, n, std::nullopt, true, points[i], rule.points[j]);
    out[i] = QuadRule1D::pairwise_sum(terms);
  }
  return out;
}

std::vector<double> project_polynomial(const MVPoly& f, int n, const ConeParams& params,
                                       const DomainRule& rule, const std::vector<ConePoint>& points,
                                       ProjectionRoute route) {
  if (f.dim() != params.d) throw ShapeError("polynomial dimension does not match d");
  if (rule.exact_degree < f.degree() + n)
    throw ConfigurationError("rule order is too low for an exact projection");
  return project([&](const ConePoint& p) { return evaluate(f, p.x, p.t); }, n, params, rule, points,
                 route);
}

std::vector<double> cesaro_partial_sum(const ConeFunction& f, int n, std::optional<double> delta,
                                       const ConeParams& params, const DomainRule& rule,
                                       const std::vector<ConePoint>& points, SummationRoute route) {
  require_rule(params, rule);
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
  std::vector<double> w = degree_weights(n, delta);
  std::vector<double> out(points.size(), 0.0);
  if (route == SummationRoute::projections) {
    ExpansionCoefficients ec = expand(f, n, params, rule);
    auto basis = cached_basis(params, n);
    const auto& els = basis->elements();
    std::vector<double> vals;
    for (std::size_t i = 0; i < points.size(); ++i) {
      basis->evaluate_all(points[i], vals);
      double s = 0.0;
      for (std::size_t k = 0; k < els.size(); ++k)
        s += w[els[k].n] * ec.coeffs.at({els[k].n, els[k].m, els[k].inner}) * vals[k];
      out[i] = s;
    }
    return out;
  }
  std::vector<double> fv = sample(f, rule);
  std::vector<double> terms(rule.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < rule.size(); ++j)
      terms[j] = rule.weights[j] * fv[j] * kernel_for(params, n, delta, false, points[i], rule.points[j]);
    out[i] = QuadRule1D::pairwise_sum(terms);
  }
  return out;
}

LebesgueResult lebesgue_function(const ConePoint& p, int n, double delta, const ConeParams& params,
                                 int start_order) {
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
  if (delta < 0.0) throw ParameterDomainError("Cesaro order must be non-negative");
  require_in_domain(params, p);
  int order = start_order > 0 ? start_order : 2 * n + 4;
  LebesgueResult res;
  for (int k = 0; k <= kMaxDoublings; ++k, order *= 2) {
    DomainRule rule = cone_rule(params, order);
    double v = rule.integrate(
        [&](const ConePoint& q) { return std::abs(summability_kernel(params, n, delta, p, q)); });
    res.previous = res.value;
    res.value = v;
    res.order = order;
    if (k > 0 && std::abs(v - res.previous) <= kRefineTol * std::abs(v)) {
      res.converged = true;
      break;
    }
  }
  return res;
}

LebesgueResult apex_lebesgue(int n, double delta, const ConeParams& params, int start_nodes) {
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
  if (delta < 0.0) throw ParameterDomainError("Cesaro order must be non-negative");
  params.validate();
  if (params.is_laguerre()) throw CapabilityError("apex reduction is stated for the Jacobi families");
  const double a = params.radial_exponent(), b = params.gamma;
  std::vector<double> cw = cesaro_weights(n, delta);
  std::vector<double> coef(n + 1);
  for (int k = 0; k <= n; ++k) coef[k] = cw[k] * jacobi_p(k, a, b, 1.0) / jacobi_norm(k, a, b);
  auto kernel = [&](double y) {
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += coef[k] * jacobi_p(k, a, b, y);
    return std::abs(s);
  };
  int m = start_nodes > 0 ? start_nodes : n + 8;
  LebesgueResult res;
  for (int k = 0; k <= kMaxDoublings; ++k, m *= 2) {
    double v = jacobi_measure(a, b, m).integrate(kernel);
    res.previous = res.value;
    res.value = v;
    res.order = m;
    if (k > 0 && std::abs(v - res.previous) <= kRefineTol * std::abs(v)) {
      res.converged = true;
      break;
    }
  }
  return res;
}

double cone_norm(const std::vector<double>& values, const DomainRule& rule, double p) {
  if (values.size() != rule.size()) throw ShapeError("values do not match the rule");
  if (!(p >= 1.0)) throw ParameterDomainError("norm exponent must be at least 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  std::vector<double> t(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) t[i] = rule.weights[i] * std::pow(std::abs(values[i]), p);
  return std::pow(QuadRule1D::pairwise_sum(t), 1.0 / p);
}

double weight_norm(const EvenFunction& g, double lambda, double p, int nodes) {
  if (!(p >= 1.0)) throw ParameterDomainError("norm exponent must be at least 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (int k = 0; k <= 2000; ++k) m = std::max(m, std::abs(g(-1.0 + k / 1000.0)));
    return m;
  }
  QuadRule1D r = gegenbauer_measure(lambda, nodes);
  return std::pow(r.integrate([&](double u) { return std::pow(std::abs(g(u)), p); }), 1.0 / p);
}

std::pair<double, double> translation_l1_bound(const EvenFunction& g, const ConePoint& p,
                                               const ConeParams& params, const DomainRule& rule,
                                               int order) {
  require_rule(params, rule);
  require_even(g);
  Translation tr(params, order);
  double lhs = rule.integrate([&](const ConePoint& q) { return std::abs(tr.apply(g, p, q)); });
  return {lhs, weight_norm(g, critical_index(params), 1.0)};
}

YoungResult check_young(const ConeFunction& f, const EvenFunction& g, double p, double q, double r,
                        const ConeParams& params, const DomainRule& rule, int order) {
  for (double e : {p, q, r})
    if (!(e >= 1.0)) throw ParameterDomainError("Young exponents must be at least 1");
  double gap = 1.0 / p - (1.0 / r + 1.0 / q - 1.0);
  if (std::abs(gap) > 1e-12) throw ParameterDomainError("Young exponents violate 1/p = 1/r + 1/q - 1");
  std::vector<double> conv = convolve(f, g, params, rule, rule.points, order);
  YoungResult y;
  y.lhs = cone_norm(conv, rule, p);
  y.rhs = cone_norm(sample(f, rule), rule, q) * weight_norm(g, critical_index(params), r);
  return y;
}

}  // namespace conekit
