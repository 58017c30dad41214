#include "conekit/coneops.hpp"

#include <algorithm>
#include <cmath>

#include "conekit/errors.hpp"
#include "conekit/scalar1d.hpp"

namespace conekit {

namespace {

OperatorKind kind_for(ConeFamily f) {
  switch (f) {
    case ConeFamily::cone_jacobi: return OperatorKind::solid_jacobi;
    case ConeFamily::cone_laguerre: return OperatorKind::solid_laguerre;
    case ConeFamily::surface_jacobi: return OperatorKind::surface_jacobi;
    case ConeFamily::surface_laguerre: return OperatorKind::surface_laguerre;
  }
  return OperatorKind::solid_jacobi;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double c : v) m = std::max(m, std::abs(c));
  return m;
}

struct Derivatives {
  double f_t = 0.0, f_tt = 0.0;
  std::vector<double> f_i, f_ii, f_it;
  std::vector<std::vector<double>> f_ij;
};

Derivatives fd_derivatives(const ScalarField& f, const ConePoint& p, double h) {
  const int d = static_cast<int>(p.x.size());
  auto eval = [&](const std::vector<double>& shift_x, double shift_t) {
    std::vector<double> x = p.x;
    for (int i = 0; i < d; ++i) x[i] += shift_x[i];
    return f(x, p.t + shift_t);
  };
  const double c1[4] = {1.0, -8.0, 8.0, -1.0};
  const double o1[4] = {-2.0, -1.0, 1.0, 2.0};
  // variable index d means t
  auto dir = [&](int v, double s, std::vector<double>& sx, double& st) {
    if (v == d) {
      st += s;
    } else {
      sx[v] += s;
    }
  };
  auto first = [&](int v) {
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
      std::vector<double> sx(d, 0.0);
      double st = 0.0;
      dir(v, o1[k] * h, sx, st);
      acc += c1[k] * eval(sx, st);
    }
    return acc / (12.0 * h);
  };
  auto second = [&](int v) {
    const double c2[5] = {-1.0, 16.0, -30.0, 16.0, -1.0};
    const double o2[5] = {-2.0, -1.0, 0.0, 1.0, 2.0};
    double acc = 0.0;
    for (int k = 0; k < 5; ++k) {
      std::vector<double> sx(d, 0.0);
      double st = 0.0;
      dir(v, o2[k] * h, sx, st);
      acc += c2[k] * eval(sx, st);
    }
    return acc / (12.0 * h * h);
  };
  auto mixed = [&](int a, int b) {
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
      for (int l = 0; l < 4; ++l) {
        std::vector<double> sx(d, 0.0);
        double st = 0.0;
        dir(a, o1[k] * h, sx, st);
        dir(b, o1[l] * h, sx, st);
        acc += c1[k] * c1[l] * eval(sx, st);
      }
    }
    return acc / (144.0 * h * h);
  };
  Derivatives D;
  D.f_t = first(d);
  D.f_tt = second(d);
  D.f_i.resize(d);
  D.f_ii.resize(d);
  D.f_it.resize(d);
  D.f_ij.assign(d, std::vector<double>(d, 0.0));
  for (int i = 0; i < d; ++i) {
    D.f_i[i] = first(i);
    D.f_ii[i] = second(i);
    D.f_it[i] = mixed(i, d);
    for (int j = i + 1; j < d; ++j) D.f_ij[i][j] = mixed(i, j);
  }
  return D;
}

double combine(const OperatorSpec& spec, const Derivatives& D, const ConePoint& p) {
  const int d = static_cast<int>(p.x.size());
  const double t = p.t, mu = spec.params.mu, g = spec.params.gamma;
  double euler = 0.0, mixed_t = 0.0, lap = 0.0;
  for (int i = 0; i < d; ++i) {
    euler += p.x[i] * D.f_i[i];
    mixed_t += p.x[i] * D.f_it[i];
    lap += D.f_ii[i];
  }
  if (spec.kind == OperatorKind::solid_laguerre)
    return t * (lap + D.f_tt) + 2.0 * mixed_t - euler + (2.0 * mu + d - t) * D.f_t;
  double v = t * (1.0 - t) * D.f_tt + 2.0 * (1.0 - t) * mixed_t;
  for (int i = 0; i < d; ++i) {
    v += (t - p.x[i] * p.x[i]) * D.f_ii[i];
    for (int j = i + 1; j < d; ++j) v -= 2.0 * p.x[i] * p.x[j] * D.f_ij[i][j];
  }
  v += (2.0 * mu + d) * D.f_t - (2.0 * mu + g + d + 1.0) * (euler + t * D.f_t);
  return v;
}

}  // namespace

OperatorSpec OperatorSpec::for_params(const ConeParams& params) {
  OperatorSpec s;
  s.kind = kind_for(params.family);
  s.params = params;
  return s;
}

bool OperatorSpec::is_surface() const {
  return kind == OperatorKind::surface_jacobi || kind == OperatorKind::surface_laguerre;
}

void OperatorSpec::validate() const {
  params.validate();
  if (kind_for(params.family) != kind) throw ConfigurationError("operator kind does not match the family");
  double want = is_surface() ? -1.0 : 0.0;
  if (params.beta != want)
    throw ConfigurationError(is_surface() ? "surface operators need beta = -1"
                                          : "solid operators need beta = 0");
}

double OperatorSpec::eigenvalue(int n) const {
  const double d = params.d;
  switch (kind) {
    case OperatorKind::solid_jacobi: return -n * (n + 2.0 * params.mu + params.gamma + d);
    case OperatorKind::solid_laguerre: return -static_cast<double>(n);
    case OperatorKind::surface_jacobi: return -n * (n + params.gamma + d - 1.0);
    case OperatorKind::surface_laguerre: return -static_cast<double>(n);
  }
  return 0.0;
}

MVPoly apply_operator(const OperatorSpec& spec, const MVPoly& u) {
  if (spec.is_surface()) throw CapabilityError("surface operators act on separated forms only");
  const int d = u.dim();
  if (d != spec.params.d) throw ShapeError("polynomial dimension does not match d");
  const double mu = spec.params.mu;
  MVPoly t = MVPoly::variable(d, Variable::t());
  MVPoly one = MVPoly::constant(d, 1.0);
  MVPoly ut = differentiate(u, Variable::t());
  MVPoly utt = differentiate(ut, Variable::t());
  MVPoly eu = euler_x(u);
  MVPoly eut = euler_x(ut);
  if (spec.kind == OperatorKind::solid_laguerre) {
    MVPoly r = t * (laplacian_x(u) + utt) + eut * 2.0 - eu + (one * (2.0 * mu + d) - t) * ut;
    return r;
  }
  const double g = spec.params.gamma;
  MVPoly r = t * (one - t) * utt + (one - t) * eut * 2.0;
  std::vector<MVPoly> x, ux;
  for (int i = 0; i < d; ++i) {
    x.push_back(MVPoly::variable(d, Variable::x(i)));
    ux.push_back(differentiate(u, Variable::x(i)));
  }
  for (int i = 0; i < d; ++i) {
    r += (t - x[i] * x[i]) * differentiate(ux[i], Variable::x(i));
    for (int j = i + 1; j < d; ++j) r -= x[i] * x[j] * differentiate(ux[i], Variable::x(j)) * 2.0;
  }
  r += ut * (2.0 * mu + d) - (eu + t * ut) * (2.0 * mu + g + d + 1.0);
  return r;
}

std::vector<double> apply_surface_operator_radial(const OperatorSpec& spec,
                                                  const std::vector<double>& f, int m) {
  if (!spec.is_surface()) throw CapabilityError("radial operator is for surface kinds");
  if (m < 0) throw ParameterDomainError("harmonic degree must be non-negative");
  const double d = spec.params.d, g = spec.params.gamma;
  const double lb = m * (m + d - 2.0);
  std::size_t len = std::max<std::size_t>(f.size(), 1);
  std::vector<double> out(len, 0.0);
  auto add = [&](std::size_t k, double v) {
    if (k >= out.size()) out.resize(k + 1, 0.0);
    out[k] += v;
  };
  if (!f.empty() && lb != 0.0 && f[0] != 0.0)
    throw ConsistencyError("t^{-1} term does not cancel: radial profile lacks a factor t");
  bool jac = spec.kind == OperatorKind::surface_jacobi;
  for (std::size_t k = 0; k < f.size(); ++k) {
    double c = f[k];
    if (c == 0.0) continue;
    double kk = static_cast<double>(k);
    if (k >= 1) {
      // t f'' and (d-1) f' and -lb f/t all land on t^{k-1}
      add(k - 1, c * (kk * (kk - 1.0) + (d - 1.0) * kk - lb));
      add(k, -c * kk * (jac ? (kk - 1.0) + (d + g) : 1.0));
    }
  }
  return out;
}

std::vector<double> apply_surface_operator(const OperatorSpec& spec, const std::vector<double>& g,
                                           int m) {
  if (m < 0) throw ParameterDomainError("harmonic degree must be non-negative");
  std::vector<double> f(g.size() + m, 0.0);
  for (std::size_t k = 0; k < g.size(); ++k) f[k + m] = g[k];
  return apply_surface_operator_radial(spec, f, m);
}

double poly_residual(const OperatorSpec& spec, const MVPoly& u, int n) {
  double lam = spec.eigenvalue(n);
  MVPoly r = apply_operator(spec, u) - u * lam;
  double denom = lam != 0.0 ? std::abs(lam) * u.max_abs_coefficient() : 1.0;
  return r.max_abs_coefficient() / denom;
}

double eigen_residual(const ConeBasisElement& element, const OperatorSpec& spec) {
  spec.validate();
  if (!(element.params == spec.params))
    throw ConfigurationError("element parameters do not match the operator");
  if (!spec.is_surface()) return poly_residual(spec, element.poly, element.n);
  int k = element.n - element.m;
  std::vector<double> g = spec.kind == OperatorKind::surface_laguerre
                              ? laguerre_coefficients(k, element.radial_a)
                              : shifted_jacobi_coefficients(k, element.radial_a, element.radial_b);
  std::vector<double> f(g.size() + element.m, 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) f[i + element.m] = g[i];
  std::vector<double> df = apply_surface_operator_radial(spec, f, element.m);
  double lam = spec.eigenvalue(element.n);
  df.resize(std::max(df.size(), f.size()), 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) df[i] -= lam * f[i];
  double denom = lam != 0.0 ? std::abs(lam) * max_abs(f) : 1.0;
  return max_abs(df) / denom;
}

double fd_apply(const OperatorSpec& spec, const ScalarField& f, const ConePoint& point,
                double step, bool richardson) {
  if (spec.is_surface()) throw CapabilityError("finite differences are for solid operators");
  const int d = spec.params.d;
  if (static_cast<int>(point.x.size()) != d) throw ShapeError("point dimension mismatch");
  double reach = 2.0 * step;
  double r = norm2(point.x);
  bool ok = point.t > 2.0 * reach && r + reach * std::sqrt(static_cast<double>(d)) < point.t - reach;
  if (spec.kind == OperatorKind::solid_jacobi) ok = ok && point.t < 1.0 - reach;
  if (!ok) throw GeometryError("finite-difference stencil leaves the cone");
  double coarse = combine(spec, fd_derivatives(f, point, step), point);
  if (!richardson) return coarse;
  double fine = combine(spec, fd_derivatives(f, point, step / 2.0), point);
  return (16.0 * fine - coarse) / 15.0;
}

}  // namespace conekit
