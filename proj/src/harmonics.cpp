#include "conekit/harmonics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "conekit/errors.hpp"
#include "conekit/quaddomains.hpp"
#include "conekit/scalar1d.hpp"

namespace conekit {

namespace {

void require_harmonic_dim(int d) {
  if (d != 2 && d != 3) throw CapabilityError("harmonic bases exist only for d in {2,3}");
}

double legendre_scale(int l, int k) {
  double r = std::exp(0.5 * (std::lgamma(l - k + 1.0) - std::lgamma(l + k + 1.0)));
  return std::sqrt((2.0 * l + 1.0) * (k == 0 ? 1.0 : 2.0)) * r;
}

// (order, sine) for position ell among the harmonics of one degree
std::pair<int, bool> decode_ell(int d, int m, int ell) {
  if (d == 2) {
    if (m == 0) return {0, false};
    return {m, ell == 1};
  }
  if (ell == 0) return {0, false};
  return {(ell + 1) / 2, ell % 2 == 0};
}

// Re/Im of (x1 + i x2)^k for k = 0..m
void complex_powers(int m, double x1, double x2, std::vector<double>& c, std::vector<double>& s) {
  c.assign(m + 1, 0.0);
  s.assign(m + 1, 0.0);
  c[0] = 1.0;
  for (int k = 0; k < m; ++k) {
    c[k + 1] = c[k] * x1 - s[k] * x2;
    s[k + 1] = s[k] * x1 + c[k] * x2;
  }
}

// r^{l-k} d^k P_l/dz^k (z/r) at l = m
double legendre_solid(int m, int k, double z, double r2) {
  double p0 = 1.0;
  for (int j = 1; j <= k; ++j) p0 *= 2.0 * j - 1.0;
  if (m == k) return p0;
  double p1 = (2.0 * k + 1.0) * z * p0;
  for (int l = k + 2; l <= m; ++l) {
    double p2 = ((2.0 * l - 1.0) * z * p1 - (l + k - 1.0) * r2 * p0) / (l - k);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

MVPoly legendre_solid_poly(int m, int k) {
  MVPoly z = MVPoly::variable(3, Variable::x(2));
  MVPoly r2 = norm_squared_x(3);
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c *= 2.0 * j - 1.0;
  MVPoly p0 = MVPoly::constant(3, c);
  if (m == k) return p0;
  MVPoly p1 = z * p0 * (2.0 * k + 1.0);
  for (int l = k + 2; l <= m; ++l) {
    MVPoly p2 = (z * p1 * (2.0 * l - 1.0) - r2 * p0 * (l + k - 1.0)) * (1.0 / (l - k));
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

// Re and Im of (x1 + i x2)^k as polynomials in dim variables
std::pair<MVPoly, MVPoly> complex_power_poly(int dim, int k) {
  MVPoly x1 = MVPoly::variable(dim, Variable::x(0));
  MVPoly x2 = MVPoly::variable(dim, Variable::x(1));
  MVPoly c = MVPoly::constant(dim, 1.0), s(dim);
  for (int j = 0; j < k; ++j) {
    MVPoly cn = c * x1 - s * x2;
    MVPoly sn = s * x1 + c * x2;
    c = std::move(cn);
    s = std::move(sn);
  }
  return {c, s};
}

}  // namespace

int harmonic_dimension(int d, int m) {
  if (m < 0) return 0;
  double a = binomial(m + d - 1.0, m);
  double b = m >= 2 ? binomial(m + d - 3.0, m - 2.0) : 0.0;
  return static_cast<int>(std::lround(a - b));
}

double harmonic_value(int d, int m, int ell, const std::vector<double>& x) {
  require_harmonic_dim(d);
  if (ell < 0 || ell >= harmonic_dimension(d, m)) throw IndexError("harmonic index out of range");
  auto [k, sine] = decode_ell(d, m, ell);
  std::vector<double> c, s;
  complex_powers(k, x[0], x[1], c, s);
  double ang = sine ? s[k] : c[k];
  if (d == 2) return m == 0 ? 1.0 : std::numbers::sqrt2 * ang;
  double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  return legendre_scale(m, k) * legendre_solid(m, k, x[2], r2) * ang;
}

double HarmonicElement::evaluate(const std::vector<double>& x) const {
  return harmonic_value(d, m, ell, x);
}

std::vector<double> harmonic_values(int d, int m, const std::vector<double>& x) {
  require_harmonic_dim(d);
  std::vector<double> c, s;
  complex_powers(m, x[0], x[1], c, s);
  std::vector<double> out;
  if (d == 2) {
    if (m == 0) return {1.0};
    return {std::numbers::sqrt2 * c[m], std::numbers::sqrt2 * s[m]};
  }
  double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  out.reserve(2 * m + 1);
  for (int k = 0; k <= m; ++k) {
    double v = legendre_scale(m, k) * legendre_solid(m, k, x[2], r2);
    out.push_back(v * c[k]);
    if (k > 0) out.push_back(v * s[k]);
  }
  return out;
}

std::vector<HarmonicElement> harmonic_basis(int d, int m) {
  require_harmonic_dim(d);
  if (m < 0) throw ParameterDomainError("degree must be non-negative");
  std::vector<HarmonicElement> out;
  int count = harmonic_dimension(d, m);
  for (int ell = 0; ell < count; ++ell) {
    HarmonicElement h;
    h.d = d;
    h.m = m;
    h.ell = ell;
    auto [k, sine] = decode_ell(d, m, ell);
    h.order = k;
    h.sine = sine;
    auto [cp, sp] = complex_power_poly(d, k);
    MVPoly ang = sine ? sp : cp;
    if (d == 2) {
      h.scale = m == 0 ? 1.0 : std::numbers::sqrt2;
      h.poly = ang * h.scale;
    } else {
      h.scale = legendre_scale(m, k);
      h.poly = legendre_solid_poly(m, k) * ang * h.scale;
    }
    out.push_back(std::move(h));
  }
  return out;
}

double BallBasisElement::evaluate_homogeneous(const std::vector<double>& x, double t) const {
  if (d == 1) return norm_factor * jacobi_p_homogeneous(n, mu - 0.5, mu - 0.5, x[0], t);
  int deg = n - 2 * m;
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  double rad = jacobi_p_homogeneous(m, mu - 0.5, deg + (d - 2) / 2.0, 2.0 * r2 - t * t, t * t);
  return norm_factor * rad * harmonic_value(d, deg, ell, x);
}

std::vector<BallBasisElement> segment_basis(double mu, int n) {
  if (!(mu > -0.5)) throw ParameterDomainError("ball weight needs mu > -1/2");
  BallBasisElement e;
  e.d = 1;
  e.mu = mu;
  e.n = n;
  e.norm_factor = 1.0 / std::sqrt(jacobi_norm(n, mu - 0.5, mu - 0.5));
  std::vector<double> c = jacobi_coefficients(n, mu - 0.5, mu - 0.5);
  e.poly = compose_univariate(c, MVPoly::variable(1, Variable::x(0))) * e.norm_factor;
  return {e};
}

std::vector<BallBasisElement> ball_basis(int d, double mu, int n) {
  require_harmonic_dim(d);
  if (!(mu > -0.5)) throw ParameterDomainError("ball weight needs mu > -1/2");
  if (n < 0) throw ParameterDomainError("degree must be non-negative");
  using Key = std::tuple<int, double, int>;
  static std::mutex mutex;
  static std::map<Key, std::vector<BallBasisElement>> cache;
  Key key{d, mu, n};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  DomainRule rule = make_rule(DomainSpec::ball(d, mu), std::max(1, 2 * n));
  MVPoly q = norm_squared_x(d) * 2.0 - MVPoly::constant(d, 1.0);
  std::vector<BallBasisElement> out;
  for (int m = 0; 2 * m <= n; ++m) {
    int deg = n - 2 * m;
    double b = deg + (d - 2) / 2.0;
    MVPoly rad = compose_univariate(jacobi_coefficients(m, mu - 0.5, b), q);
    std::vector<HarmonicElement> hs = harmonic_basis(d, deg);
    for (const HarmonicElement& h : hs) {
      BallBasisElement e;
      e.d = d;
      e.mu = mu;
      e.n = n;
      e.m = m;
      e.ell = h.ell;
      double nrm = rule.integrate([&](const ConePoint& p) {
        double v = e.evaluate(p.x);
        return v * v;
      });
      e.norm_factor = 1.0 / std::sqrt(nrm);
      e.poly = rad * h.poly * e.norm_factor;
      out.push_back(std::move(e));
    }
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, out);
  return out;
}

double verify_addition(int d, int m, const std::vector<double>& x, const std::vector<double>& y) {
  require_harmonic_dim(d);
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw ShapeError("point dimension mismatch");
  if (std::abs(norm2(x) - 1.0) > 1e-12 || std::abs(norm2(y) - 1.0) > 1e-12)
    throw GeometryError("addition formula needs unit vectors");
  std::vector<double> hx = harmonic_values(d, m, x), hy = harmonic_values(d, m, y);
  double sum = 0.0;
  for (std::size_t i = 0; i < hx.size(); ++i) sum += hx[i] * hy[i];
  return std::abs(sum - gegenbauer_z(m, (d - 2) / 2.0, dot(x, y)));
}

MVPoly ball_operator(const MVPoly& u, double mu) {
  int d = u.dim();
  MVPoly eu = euler_x(u);
  return laplacian_x(u) - euler_x(eu) - eu * (2.0 * mu + d - 1.0);
}

}  // namespace conekit
