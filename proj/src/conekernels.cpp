#include "conekit/conekernels.hpp"

#include <cmath>

#include "conekit/conebasis.hpp"
#include "conekit/errors.hpp"

namespace conekit {

namespace {

constexpr double kEdge = 1e-12;

bool closed_range_ok(const ConeParams& p) {
  if (p.is_laguerre()) return false;
  if (p.is_surface()) return p.beta >= -1.0 && p.gamma >= -0.5;
  return p.mu >= 0.0 && p.beta >= 0.0 && p.gamma >= -0.5;
}

void require_closed_range(const ConeParams& p) {
  if (p.is_laguerre()) throw CapabilityError("closed formulas exist for the Jacobi families only");
  if (!closed_range_ok(p))
    throw ParameterDomainError(p.is_surface() ? "closed formula needs beta >= -1, gamma >= -1/2"
                                              : "closed formula needs mu >= 0, beta >= 0, gamma >= -1/2");
}

double radial_value(const ConeParams& params, int k, double a, double t) {
  if (params.is_laguerre()) return laguerre_l(k, a, t);
  return jacobi_p(k, a, params.gamma, 1.0 - 2.0 * t);
}

std::vector<double> kind_weights(KernelKind kind, int n, double delta) {
  switch (kind) {
    case KernelKind::projection: {
      std::vector<double> w(n + 1, 0.0);
      w[n] = 1.0;
      return w;
    }
    case KernelKind::partial_sum: return std::vector<double>(n + 1, 1.0);
    case KernelKind::cesaro: return cesaro_weights(n, delta);
  }
  return {};
}

double square_root_checked(double v) {
  if (v < -kEdge) throw GeometryError("negative radicand in the kernel argument");
  return v > 0.0 ? std::sqrt(v) : 0.0;
}

}  // namespace

void KernelRequest::validate() const {
  params.validate();
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
  if (kind == KernelKind::cesaro && !(delta >= 0.0))
    throw ParameterDomainError("Cesaro order must be non-negative");
  if (quad_order != 0 && quad_order < n + 1)
    throw ConfigurationError("quadrature order below n + 1 loses exactness");
  switch (route) {
    case KernelRoute::basis_sum: break;
    case KernelRoute::triangle_integral:
      if (params.is_surface() ? params.beta < -1.0 : (params.mu < 0.0 || params.beta < 0.0))
        throw ParameterDomainError("triangle route needs mu >= 0 and beta >= 0 (surface beta >= -1)");
      break;
    case KernelRoute::closed_form: require_closed_range(params); break;
    case KernelRoute::fourpoint_d2:
      if (params.family != ConeFamily::surface_jacobi || params.d != 2 || params.beta != -1.0 ||
          params.gamma != -0.5)
        throw ParameterDomainError("four-point formula needs the d=2 surface with beta=-1, gamma=-1/2");
      break;
  }
}

double kernel_basis_sum(const ConeParams& params, int n, KernelKind kind, const ConePoint& p,
                        const ConePoint& q, double delta) {
  params.validate();
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
  require_in_domain(params, p);
  require_in_domain(params, q);
  auto basis = cached_basis(params, n);
  std::vector<double> vp, vq;
  basis->evaluate_all(p, vp);
  basis->evaluate_all(q, vq);
  std::vector<double> w = kind_weights(kind, n, delta);
  const auto& els = basis->elements();
  double total = 0.0;
  for (int k = 0; k <= n; ++k) {
    if (w[k] == 0.0) continue;
    auto [b, e] = basis->degree_range(k);
    double s = 0.0;
    for (std::size_t i = b; i < e; ++i) s += vp[i] * vq[i] / els[i].norm;
    total += w[k] * s;
  }
  return total;
}

double triangle_kernel_diag(double alpha, double gamma, int n, double u, double t, double s) {
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
  if (!(alpha > -0.5) || !(gamma > -1.0)) throw ParameterDomainError("triangle weight out of range");
  if (std::abs(u) > t * (1.0 + kEdge) + kEdge || t > 1.0 + kEdge || s < -kEdge || s > 1.0 + kEdge)
    throw GeometryError("point outside the triangle");
  double a0 = 2.0 * alpha;
  double c0 = jacobi_constant(a0, gamma);
  double sum = 0.0, sm = 1.0;
  for (int m = 0; m <= n; ++m) {
    double a = a0 + 2.0 * m;
    double h = c0 / jacobi_constant(a, gamma) * jacobi_norm(n - m, a, gamma);
    double r = jacobi_p(n - m, a, gamma, 1.0 - 2.0 * t) * jacobi_p(n - m, a, gamma, 1.0 - 2.0 * s);
    sum += r / h * sm * gegenbauer_z_homogeneous(m, alpha, u, t);
    sm *= s;
  }
  return sum;
}

Translation::Translation(const ConeParams& params, int order) : params_(params), order_(order) {
  params.validate();
  if (order < 1) throw ConfigurationError("quadrature order must be positive");
  const double d = params.d, mu = params.mu, beta = params.beta;
  if (params.is_surface()) {
    if (beta < -1.0) throw ParameterDomainError("surface translation needs beta >= -1");
    if (beta == -1.0) {
      stage1_.push_back({1.0, 1.0, 0.0, 0.0});
    } else {
      QuadRule1D z1 = jacobi_measure((d - 2.0) / 2.0, (beta - 1.0) / 2.0, order);
      QuadRule1D z2 = gegenbauer_measure((beta + 1.0) / 2.0, order);
      for (std::size_t i = 0; i < z1.size(); ++i)
        for (std::size_t j = 0; j < z2.size(); ++j) {
          double c = 0.5 * (1.0 - z1.nodes[i]);
          stage1_.push_back({z1.weights[i] * z2.weights[j], c, 0.0, 0.5 * (1.0 + z1.nodes[i]) * z2.nodes[j]});
        }
    }
  } else {
    if (mu < 0.0 || beta < 0.0) throw ParameterDomainError("solid translation needs mu >= 0, beta >= 0");
    QuadRule1D u = gegenbauer_measure(mu - 0.5, order);
    if (beta == 0.0) {
      for (std::size_t k = 0; k < u.size(); ++k) stage1_.push_back({u.weights[k], 1.0, u.nodes[k], 0.0});
    } else {
      QuadRule1D z1 = jacobi_measure(mu + (d - 1.0) / 2.0, beta / 2.0 - 1.0, order);
      QuadRule1D z2 = gegenbauer_measure(beta / 2.0, order);
      for (std::size_t i = 0; i < z1.size(); ++i)
        for (std::size_t j = 0; j < z2.size(); ++j)
          for (std::size_t k = 0; k < u.size(); ++k) {
            double c = 0.5 * (1.0 - z1.nodes[i]);
            stage1_.push_back({z1.weights[i] * z2.weights[j] * u.weights[k], c, c * u.nodes[k],
                               0.5 * (1.0 + z1.nodes[i]) * z2.nodes[j]});
          }
    }
  }
  if (!params.is_laguerre() && params.gamma >= -0.5) {
    v1_ = gegenbauer_measure(params.alpha() - 0.5, order);
    v2_ = gegenbauer_measure(params.gamma, order);
  }
}

void Translation::scalar_nodes(const ConePoint& p, const ConePoint& q, std::vector<double>& a,
                               std::vector<double>& w) const {
  require_in_domain(params_, p);
  require_in_domain(params_, q);
  double xy = dot(p.x, q.x);
  double rr = 0.0;
  if (!params_.is_surface()) {
    double rp = p.t * p.t - dot(p.x, p.x), rq = q.t * q.t - dot(q.x, q.x);
    rr = std::sqrt(std::max(rp, 0.0)) * std::sqrt(std::max(rq, 0.0));
  }
  double ts = p.t * q.t;
  a.resize(stage1_.size());
  w.resize(stage1_.size());
  for (std::size_t i = 0; i < stage1_.size(); ++i) {
    const Node& nd = stage1_[i];
    a[i] = nd.c_xy * xy + nd.c_rr * rr + nd.c_ts * ts;
    w[i] = nd.w;
  }
}

double Translation::apply(const std::function<double(double)>& g, const ConePoint& p,
                          const ConePoint& q) const {
  require_closed_range(params_);
  std::vector<double> a, w;
  scalar_nodes(p, q, a, w);
  double ts = p.t * q.t;
  double b = square_root_checked(1.0 - p.t) * square_root_checked(1.0 - q.t);
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double A = square_root_checked(0.5 * (ts + a[i]));
    double inner = 0.0;
    for (std::size_t j = 0; j < v1_.size(); ++j) {
      double part = 0.0;
      for (std::size_t k = 0; k < v2_.size(); ++k) {
        double xi = v1_.nodes[j] * A + v2_.nodes[k] * b;
        if (std::abs(xi) > 1.0 + kEdge) throw GeometryError("kernel argument outside [-1,1]");
        part += v2_.weights[k] * g(xi);
      }
      inner += v1_.weights[j] * part;
    }
    total += w[i] * inner;
  }
  return total;
}

double Translation::triangle(int n, const ConePoint& p, const ConePoint& q) const {
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
  std::vector<double> a, w;
  scalar_nodes(p, q, a, w);
  const double alpha = params_.alpha(), a0 = params_.radial_exponent();
  std::vector<double> coef(n + 1);
  for (int m = 0; m <= n; ++m) {
    double ra = a0 + 2.0 * m;
    coef[m] = radial_value(params_, n - m, ra, p.t) * radial_value(params_, n - m, ra, q.t) /
              basis_norm(params_, n, m);
  }
  double ts = p.t * q.t;
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double s = 0.0;
    for (int m = 0; m <= n; ++m) s += coef[m] * gegenbauer_z_homogeneous(m, alpha, a[i], ts);
    total += w[i] * s;
  }
  return total;
}

double kernel_closed(const ConeParams& params, int n, const ConePoint& p, const ConePoint& q,
                     int order) {
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
  require_closed_range(params);
  Translation tr(params, order > 0 ? order : n + 2);
  double lam = tr.lambda();
  return tr.apply([&](double x) { return gegenbauer_z(2 * n, lam, x); }, p, q);
}

double kernel_triangle_route(const ConeParams& params, int n, const ConePoint& p,
                             const ConePoint& q, int order) {
  Translation tr(params, order > 0 ? order : n + 2);
  return tr.triangle(n, p, q);
}

namespace {

ConeParams fourpoint_params() { return ConeParams::surface_jacobi(2, -1.0, -0.5); }

double fourpoint_sum(int n, double A1, double A2, double B) {
  return gegenbauer_z(2 * n, 0.5, A1 + B) + gegenbauer_z(2 * n, 0.5, -A2 + B) +
         gegenbauer_z(2 * n, 0.5, A1 - B) + gegenbauer_z(2 * n, 0.5, -A2 - B);
}

struct FourArgs {
  double plus, minus, b;
};

FourArgs four_args(const ConePoint& p, const ConePoint& q) {
  ConeParams prm = fourpoint_params();
  require_in_domain(prm, p);
  require_in_domain(prm, q);
  double st = p.t * q.t, xy = dot(p.x, q.x);
  return {square_root_checked(0.5 * (st + xy)), square_root_checked(0.5 * (st - xy)),
          square_root_checked(1.0 - p.t) * square_root_checked(1.0 - q.t)};
}

}  // namespace

double fourpoint_constant() {
  static const double c = [] {
    ConePoint o{{0.0, 0.0}, 0.0};
    FourArgs f = four_args(o, o);
    return 1.0 / fourpoint_sum(0, f.plus, f.plus, f.b);
  }();
  return c;
}

double kernel_fourpoint_d2(int n, const ConePoint& p, const ConePoint& q) {
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
  FourArgs f = four_args(p, q);
  return fourpoint_constant() * fourpoint_sum(n, f.plus, f.plus, f.b);
}

double kernel_fourpoint_d2_printed(int n, const ConePoint& p, const ConePoint& q) {
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
  FourArgs f = four_args(p, q);
  return fourpoint_sum(n, f.plus, f.minus, f.b);
}

double critical_index(const ConeParams& params) {
  params.validate();
  return 2.0 * params.alpha() + params.gamma + 1.0;
}

double summability_kernel(const ConeParams& params, int n, std::optional<double> delta,
                          const ConePoint& p, const ConePoint& q, int order) {
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
  if (params.is_laguerre())
    return kernel_basis_sum(params, n, delta ? KernelKind::cesaro : KernelKind::partial_sum, p, q,
                            delta.value_or(0.0));
  require_closed_range(params);
  Translation tr(params, order > 0 ? order : n + 2);
  double a = tr.lambda() - 0.5;
  return tr.apply([&](double v) { return jacobi_kernel(n, a, -0.5, 2.0 * v * v - 1.0, 1.0, delta); },
                  p, q);
}

double apex_kernel_1d(const ConeParams& params, int n, std::optional<double> delta, double s) {
  params.validate();
  if (params.is_laguerre()) throw CapabilityError("apex reduction is stated for the Jacobi families");
  return jacobi_kernel(n, params.radial_exponent(), params.gamma, 1.0 - 2.0 * s, 1.0, delta);
}

double evaluate_kernel(const KernelRequest& req, const ConePoint& p, const ConePoint& q) {
  req.validate();
  const int n = req.n;
  if (req.route == KernelRoute::basis_sum)
    return kernel_basis_sum(req.params, n, req.kind, p, q, req.delta);
  if (req.route == KernelRoute::closed_form && req.kind != KernelKind::projection)
    return summability_kernel(req.params, n,
                              req.kind == KernelKind::cesaro ? std::optional<double>(req.delta)
                                                             : std::nullopt,
                              p, q, req.quad_order);
  std::vector<double> w = kind_weights(req.kind, n, req.delta);
  double total = 0.0;
  for (int k = 0; k <= n; ++k) {
    if (w[k] == 0.0) continue;
    double v = 0.0;
    switch (req.route) {
      case KernelRoute::triangle_integral:
        v = kernel_triangle_route(req.params, k, p, q, req.quad_order);
        break;
      case KernelRoute::closed_form: v = kernel_closed(req.params, k, p, q, req.quad_order); break;
      case KernelRoute::fourpoint_d2: v = kernel_fourpoint_d2(k, p, q); break;
      case KernelRoute::basis_sum: break;
    }
    total += w[k] * v;
  }
  return total;
}

}  // namespace conekit
