#include "conekit/quaddomains.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "conekit/errors.hpp"

namespace conekit {

namespace {

int ceil_half(int k) { return (k + 1) / 2; }

DomainRule sphere_rule(int d, int order) {
  DomainRule r;
  r.kind = DomainKind::sphere;
  r.params.d = d;
  if (d == 1) {
    r.points = {ConePoint{{-1.0}, 1.0}, ConePoint{{1.0}, 1.0}};
    r.weights = {0.5, 0.5};
    r.exact_degree = kAllDegrees;
    return r;
  }
  if (d == 2) {
    int n = order + 1;
    for (int j = 0; j < n; ++j) {
      double th = 2.0 * std::numbers::pi * j / n;
      r.points.push_back(ConePoint{{std::cos(th), std::sin(th)}, 1.0});
      r.weights.push_back(1.0 / n);
    }
    r.exact_degree = order;
    return r;
  }
  if (d == 3) {
    QuadRule1D z = gauss_rule(WeightSpec::jacobi(0.0, 0.0), std::max(1, ceil_half(order + 1)));
    int n = order + 1;
    for (std::size_t i = 0; i < z.size(); ++i) {
      double s = std::sqrt(std::max(0.0, 1.0 - z.nodes[i] * z.nodes[i]));
      for (int j = 0; j < n; ++j) {
        double ph = 2.0 * std::numbers::pi * j / n;
        r.points.push_back(ConePoint{{s * std::cos(ph), s * std::sin(ph), z.nodes[i]}, 1.0});
        r.weights.push_back(z.weights[i] / n);
      }
    }
    r.exact_degree = order;
    return r;
  }
  throw CapabilityError("explicit sphere rules exist only for d in {1,2,3}");
}

DomainRule ball_rule(int d, double mu, int order) {
  if (!(mu > -0.5)) throw ParameterDomainError("ball weight needs mu > -1/2");
  DomainRule sph = sphere_rule(d, order);
  QuadRule1D u = gauss_rule(WeightSpec::jacobi(mu - 0.5, (d - 2) / 2.0), ceil_half(order + 2));
  DomainRule r;
  r.kind = DomainKind::ball;
  r.params.d = d;
  r.params.mu = mu;
  for (std::size_t i = 0; i < u.size(); ++i) {
    double rad = std::sqrt(std::max(0.0, (1.0 + u.nodes[i]) / 2.0));
    for (std::size_t j = 0; j < sph.size(); ++j) {
      ConePoint p = sph.points[j];
      for (double& c : p.x) c *= rad;
      r.points.push_back(std::move(p));
      r.weights.push_back(u.weights[i] * sph.weights[j]);
    }
  }
  r.exact_degree = order;
  return r;
}

QuadRule1D radial_rule(const ConeParams& p, int nodes) {
  if (p.is_laguerre()) return gauss_rule(WeightSpec::laguerre(p.radial_exponent()), nodes);
  QuadRule1D y = gauss_rule(WeightSpec::jacobi(p.radial_exponent(), p.gamma), nodes);
  for (double& v : y.nodes) v = (1.0 - v) / 2.0;
  std::reverse(y.nodes.begin(), y.nodes.end());
  std::reverse(y.weights.begin(), y.weights.end());
  return y;
}

}  // namespace

std::string family_name(ConeFamily f) {
  switch (f) {
    case ConeFamily::cone_jacobi: return "solid-jacobi";
    case ConeFamily::cone_laguerre: return "solid-laguerre";
    case ConeFamily::surface_jacobi: return "surface-jacobi";
    case ConeFamily::surface_laguerre: return "surface-laguerre";
  }
  return "";
}

ConeFamily parse_family(const std::string& name) {
  if (name == "solid-jacobi" || name == "cone_jacobi") return ConeFamily::cone_jacobi;
  if (name == "solid-laguerre" || name == "cone_laguerre") return ConeFamily::cone_laguerre;
  if (name == "surface-jacobi" || name == "surface_jacobi") return ConeFamily::surface_jacobi;
  if (name == "surface-laguerre" || name == "surface_laguerre") return ConeFamily::surface_laguerre;
  throw ConfigurationError("unknown family '" + name + "'");
}

ConeParams ConeParams::solid_jacobi(int d, double mu, double beta, double gamma) {
  return ConeParams{d, mu, beta, gamma, ConeFamily::cone_jacobi};
}

ConeParams ConeParams::solid_laguerre(int d, double mu, double beta) {
  return ConeParams{d, mu, beta, 0.0, ConeFamily::cone_laguerre};
}

ConeParams ConeParams::surface_jacobi(int d, double beta, double gamma) {
  return ConeParams{d, 0.0, beta, gamma, ConeFamily::surface_jacobi};
}

ConeParams ConeParams::surface_laguerre(int d, double beta) {
  return ConeParams{d, 0.0, beta, 0.0, ConeFamily::surface_laguerre};
}

bool ConeParams::is_surface() const {
  return family == ConeFamily::surface_jacobi || family == ConeFamily::surface_laguerre;
}

bool ConeParams::is_laguerre() const {
  return family == ConeFamily::cone_laguerre || family == ConeFamily::surface_laguerre;
}

double ConeParams::alpha() const {
  if (is_surface()) return (beta + d - 1) / 2.0;
  return mu + (beta + d - 1) / 2.0;
}

void ConeParams::validate() const {
  if (d < 1) throw ParameterDomainError("d must be at least 1");
  if (is_surface()) {
    if (d < 2) throw ParameterDomainError("the cone surface needs d >= 2");
    if (!(beta > -d)) throw ParameterDomainError("surface weight needs beta > -d");
  } else {
    if (!(mu > -0.5)) throw ParameterDomainError("solid weight needs mu > -1/2");
    if (!(beta > -1.0)) throw ParameterDomainError("solid weight needs beta > -1");
  }
  if (!is_laguerre() && !(gamma > -1.0)) throw ParameterDomainError("Jacobi weight needs gamma > -1");
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

DomainSpec DomainSpec::sphere(int d) {
  DomainSpec s;
  s.kind = DomainKind::sphere;
  s.d = d;
  return s;
}

DomainSpec DomainSpec::ball(int d, double mu) {
  DomainSpec s;
  s.kind = DomainKind::ball;
  s.d = d;
  s.mu = mu;
  return s;
}

DomainSpec DomainSpec::triangle_v2(double alpha, double gamma) {
  DomainSpec s;
  s.kind = DomainKind::triangle_v2;
  s.d = 1;
  s.alpha = alpha;
  s.gamma = gamma;
  s.params = ConeParams::solid_jacobi(1, alpha, 0.0, gamma);
  return s;
}

DomainSpec DomainSpec::cone(const ConeParams& p) {
  DomainSpec s;
  s.kind = p.is_surface() ? DomainKind::cone_surface : DomainKind::cone_solid;
  s.d = p.d;
  s.params = p;
  return s;
}

double DomainRule::integrate(const std::function<double(const ConePoint&)>& f) const {
  std::vector<double> v(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) v[i] = weights[i] * f(points[i]);
  return QuadRule1D::pairwise_sum(v);
}

void DomainRule::write_csv(std::ostream& os) const {
  int d = params.d;
  bool with_t = kind == DomainKind::cone_solid || kind == DomainKind::cone_surface ||
                kind == DomainKind::triangle_v2;
  for (int i = 0; i < d; ++i) os << "x" << (i + 1) << ",";
  if (with_t) os << "t,";
  os << "weight\n";
  char buf[40];
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (double v : points[k].x) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      os << buf << ",";
    }
    if (with_t) {
      std::snprintf(buf, sizeof buf, "%.17g", points[k].t);
      os << buf << ",";
    }
    std::snprintf(buf, sizeof buf, "%.17g", weights[k]);
    os << buf << "\n";
  }
}

DomainRule cone_rule(const ConeParams& params, int order) {
  params.validate();
  QuadRule1D rad = radial_rule(params, std::max(1, ceil_half(order + 1)));
  DomainRule inner = params.is_surface() ? sphere_rule(params.d, order)
                                         : ball_rule(params.d, params.mu, order);
  DomainRule r;
  r.kind = params.is_surface() ? DomainKind::cone_surface : DomainKind::cone_solid;
  r.params = params;
  r.points.reserve(rad.size() * inner.size());
  for (std::size_t i = 0; i < rad.size(); ++i) {
    double t = rad.nodes[i];
    for (std::size_t j = 0; j < inner.size(); ++j) {
      ConePoint p = inner.points[j];
      for (double& c : p.x) c *= t;
      p.t = t;
      r.points.push_back(std::move(p));
      r.weights.push_back(rad.weights[i] * inner.weights[j]);
    }
  }
  r.exact_degree = order;
  return r;
}

DomainRule make_rule(const DomainSpec& domain, int order) {
  if (order < 1) throw ParameterDomainError("rule order must be at least 1");
  switch (domain.kind) {
    case DomainKind::sphere: return sphere_rule(domain.d, order);
    case DomainKind::ball: return ball_rule(domain.d, domain.mu, order);
    case DomainKind::triangle_v2: {
      DomainRule r = cone_rule(ConeParams::solid_jacobi(1, domain.alpha, 0.0, domain.gamma), order);
      r.kind = DomainKind::triangle_v2;
      return r;
    }
    case DomainKind::cone_solid:
    case DomainKind::cone_surface: return cone_rule(domain.params, order);
  }
  throw ConfigurationError("unknown domain");
}

double sphere_area(int d) {
  if (d < 1) throw ParameterDomainError("sphere dimension must be positive");
  return 2.0 * std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0);
}

double ball_constant(int d, double mu) {
  if (!(mu > -0.5)) throw ParameterDomainError("ball weight needs mu > -1/2");
  return std::exp(std::lgamma(mu + (d + 1) / 2.0) - std::lgamma(mu + 0.5)) /
         std::pow(std::numbers::pi, d / 2.0);
}

double normalization_constant(const ConeParams& p) {
  p.validate();
  switch (p.family) {
    case ConeFamily::cone_jacobi:
      return jacobi_constant(p.radial_exponent(), p.gamma) * ball_constant(p.d, p.mu);
    case ConeFamily::cone_laguerre:
      return laguerre_constant(p.radial_exponent()) * ball_constant(p.d, p.mu);
    case ConeFamily::surface_jacobi:
      return jacobi_constant(p.radial_exponent(), p.gamma) / sphere_area(p.d);
    case ConeFamily::surface_laguerre:
      return laguerre_constant(p.radial_exponent()) / sphere_area(p.d);
  }
  return 0.0;
}

double inner_product(const std::function<double(const ConePoint&)>& f,
                     const std::function<double(const ConePoint&)>& g, const ConeParams& params,
                     const DomainRule& rule) {
  if (!(rule.params == params) ||
      (rule.kind != DomainKind::cone_solid && rule.kind != DomainKind::cone_surface &&
       rule.kind != DomainKind::triangle_v2))
    throw ConfigurationError("domain rule was built for different parameters");
  return rule.integrate([&](const ConePoint& p) { return f(p) * g(p); });
}

bool in_domain(const ConeParams& params, const ConePoint& p, double tol) {
  if (static_cast<int>(p.x.size()) != params.d) return false;
  double r = norm2(p.x);
  double scale = std::max(1.0, std::abs(p.t));
  if (p.t < -tol) return false;
  if (!params.is_laguerre() && p.t > 1.0 + tol) return false;
  if (params.is_surface()) return std::abs(r - p.t) <= tol * scale;
  return r <= p.t + tol * scale;
}

void require_in_domain(const ConeParams& params, const ConePoint& p) {
  if (static_cast<int>(p.x.size()) != params.d) throw ShapeError("point dimension mismatch");
  if (!in_domain(params, p)) throw GeometryError("point lies outside the domain");
}

ConePoint random_point(const ConeParams& params, std::mt19937_64& rng, double t_max) {
  params.validate();
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  ConePoint p;
  p.t = params.is_laguerre() ? t_max * unif(rng) : unif(rng);
  p.x.resize(params.d);
  double r2 = 0.0;
  for (double& c : p.x) {
    c = normal(rng);
    r2 += c * c;
  }
  double r = params.is_surface() ? p.t : p.t * std::pow(unif(rng), 1.0 / params.d);
  double sc = r2 > 0.0 ? r / std::sqrt(r2) : 0.0;
  for (double& c : p.x) c *= sc;
  return p;
}

}  // namespace conekit
