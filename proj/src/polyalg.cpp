#include "conekit/polyalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>

#include "conekit/errors.hpp"

namespace conekit {

namespace {

constexpr int kDegreeShift = 48;

int slot_shift(int i) { return 40 - 8 * i; }

int key_degree(MVPoly::Key k) { return static_cast<int>(k >> kDegreeShift); }

void require_dim(int dim) {
  if (dim < 1 || dim > kMaxPolyDim) throw ShapeError("polynomial dimension must be in 1..5");
}

void require_same(const MVPoly& p, const MVPoly& q) {
  if (p.dim() != q.dim()) throw ShapeError("polynomial dimension mismatch");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

MVPoly::MVPoly(int dim) : dim_(dim) { require_dim(dim); }

MVPoly::Key MVPoly::pack(std::span<const int> x_exp, int t_exp) {
  if (x_exp.size() > static_cast<std::size_t>(kMaxPolyDim))
    throw ShapeError("too many x exponents");
  Key key = 0;
  int total = t_exp;
  if (t_exp < 0 || t_exp > kMaxExponent) throw DegreeError("exponent out of range");
  for (std::size_t i = 0; i < x_exp.size(); ++i) {
    if (x_exp[i] < 0 || x_exp[i] > kMaxExponent) throw DegreeError("exponent out of range");
    key |= static_cast<Key>(x_exp[i]) << slot_shift(static_cast<int>(i));
    total += x_exp[i];
  }
  key |= static_cast<Key>(t_exp);
  key |= static_cast<Key>(total) << kDegreeShift;
  return key;
}

void MVPoly::unpack(Key key, int dim, std::vector<int>& x_exp, int& t_exp) {
  x_exp.assign(dim, 0);
  for (int i = 0; i < dim; ++i) x_exp[i] = static_cast<int>((key >> slot_shift(i)) & 0xff);
  t_exp = static_cast<int>(key & 0xff);
}

MVPoly MVPoly::from_terms(int dim, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  MVPoly p(dim);
  for (const Term& tm : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == tm.first) {
      p.terms_.back().second += tm.second;
    } else {
      p.terms_.push_back(tm);
    }
  }
  std::erase_if(p.terms_, [](const Term& tm) { return tm.second == 0.0; });
  return p;
}

MVPoly MVPoly::constant(int dim, double c) {
  MVPoly p(dim);
  if (c != 0.0) p.terms_.push_back({0, c});
  return p;
}

MVPoly MVPoly::variable(int dim, Variable v) {
  std::vector<int> ex(dim, 0);
  int te = 0;
  if (v.is_t()) {
    te = 1;
  } else {
    if (v.index >= dim) throw ShapeError("variable index out of range");
    ex[v.index] = 1;
  }
  return monomial(dim, ex, te, 1.0);
}

MVPoly MVPoly::monomial(int dim, std::span<const int> x_exp, int t_exp, double coeff) {
  MVPoly p(dim);
  if (static_cast<int>(x_exp.size()) != dim) throw ShapeError("exponent length mismatch");
  if (coeff != 0.0) p.terms_.push_back({pack(x_exp, t_exp), coeff});
  return p;
}

int MVPoly::degree() const {
  if (terms_.empty()) return -1;
  return key_degree(terms_.back().first);
}

std::vector<Monomial> MVPoly::terms() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const Term& tm : terms_) {
    Monomial m;
    unpack(tm.first, dim_, m.x, m.t);
    m.coeff = tm.second;
    out.push_back(std::move(m));
  }
  return out;
}

double MVPoly::coefficient(std::span<const int> x_exp, int t_exp) const {
  Key key = pack(x_exp, t_exp);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& a, Key k) { return a.first < k; });
  if (it != terms_.end() && it->first == key) return it->second;
  return 0.0;
}

double MVPoly::max_abs_coefficient() const {
  double m = 0.0;
  for (const Term& tm : terms_) m = std::max(m, std::abs(tm.second));
  return m;
}

double MVPoly::operator()(std::span<const double> x, double t) const { return evaluate(*this, x, t); }

MVPoly MVPoly::operator-() const {
  MVPoly p = *this;
  for (Term& tm : p.terms_) tm.second = -tm.second;
  return p;
}

MVPoly& MVPoly::operator+=(const MVPoly& q) {
  require_same(*this, q);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + q.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < q.terms_.size()) {
    if (j == q.terms_.size() || (i < terms_.size() && terms_[i].first < q.terms_[j].first)) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || q.terms_[j].first < terms_[i].first) {
      merged.push_back(q.terms_[j++]);
    } else {
      double c = terms_[i].second + q.terms_[j].second;
      if (c != 0.0) merged.push_back({terms_[i].first, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

MVPoly& MVPoly::operator-=(const MVPoly& q) { return *this += -q; }

MVPoly& MVPoly::operator*=(double c) {
  if (c == 0.0) {
    terms_.clear();
    return *this;
  }
  for (Term& tm : terms_) tm.second *= c;
  std::erase_if(terms_, [](const Term& tm) { return tm.second == 0.0; });
  return *this;
}

MVPoly operator*(const MVPoly& p, const MVPoly& q) {
  require_same(p, q);
  std::vector<MVPoly::Term> out;
  out.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) {
      // exponent slots add independently; guard 8-bit overflow via the degree field
      MVPoly::Key low_a = a.first & ((MVPoly::Key(1) << kDegreeShift) - 1);
      MVPoly::Key low_b = b.first & ((MVPoly::Key(1) << kDegreeShift) - 1);
      int deg = key_degree(a.first) + key_degree(b.first);
      if (deg > kMaxExponent) throw DegreeError("product degree exceeds supported range");
      MVPoly::Key key = (low_a + low_b) | (static_cast<MVPoly::Key>(deg) << kDegreeShift);
      out.push_back({key, a.second * b.second});
    }
  }
  return MVPoly::from_terms(p.dim_, std::move(out));
}

std::string MVPoly::to_text() const {
  std::ostringstream os;
  std::vector<int> ex;
  int te = 0;
  for (const Term& tm : terms_) {
    unpack(tm.first, dim_, ex, te);
    os << format_double(tm.second);
    for (int i = 0; i < dim_; ++i)
      if (ex[i] > 0) os << " * x" << (i + 1) << "^" << ex[i];
    if (te > 0) os << " * t^" << te;
    os << "\n";
  }
  return os.str();
}

MVPoly MVPoly::from_text(int dim, std::string_view text) {
  std::vector<Term> terms;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    double coeff = 0.0;
    if (!(ls >> coeff)) throw ConfigurationError("bad coefficient on line " + std::to_string(lineno));
    std::vector<int> ex(dim, 0);
    int te = 0;
    std::string star, factor;
    while (ls >> star) {
      if (star != "*" || !(ls >> factor))
        throw ConfigurationError("bad term on line " + std::to_string(lineno));
      auto caret = factor.find('^');
      if (caret == std::string::npos)
        throw ConfigurationError("missing exponent on line " + std::to_string(lineno));
      std::string var = factor.substr(0, caret);
      int e = std::stoi(factor.substr(caret + 1));
      if (var == "t") {
        te += e;
      } else if (var.size() >= 2 && var[0] == 'x') {
        int idx = std::stoi(var.substr(1)) - 1;
        if (idx < 0 || idx >= dim)
          throw ConfigurationError("variable out of range on line " + std::to_string(lineno));
        ex[idx] += e;
      } else {
        throw ConfigurationError("unknown variable on line " + std::to_string(lineno));
      }
    }
    terms.push_back({pack(ex, te), coeff});
  }
  return from_terms(dim, std::move(terms));
}

MVPoly arith(ArithOp op, const MVPoly& p, const MVPoly& q) {
  switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
  }
  return p;
}

MVPoly scale(const MVPoly& p, double c) { return p * c; }

MVPoly differentiate(const MVPoly& p, Variable v) {
  if (!v.is_t() && (v.index < 0 || v.index >= p.dim())) throw ShapeError("variable out of range");
  std::vector<MVPoly::Term> out;
  std::vector<int> ex;
  int te = 0;
  for (const auto& tm : p.raw_terms()) {
    MVPoly::unpack(tm.first, p.dim(), ex, te);
    int e = v.is_t() ? te : ex[v.index];
    if (e == 0) continue;
    if (v.is_t()) {
      te -= 1;
    } else {
      ex[v.index] -= 1;
    }
    out.push_back({MVPoly::pack(ex, te), tm.second * e});
  }
  return MVPoly::from_terms(p.dim(), std::move(out));
}

double evaluate(const MVPoly& p, std::span<const double> x, double t) {
  const int dim = p.dim();
  if (static_cast<int>(x.size()) != dim) throw ShapeError("point dimension mismatch");
  int deg = std::max(p.degree(), 0);
  // power tables, one row per variable
  double pw[kMaxPolyDim + 1][kMaxExponent + 1];
  for (int v = 0; v <= dim; ++v) {
    double base = v < dim ? x[v] : t;
    pw[v][0] = 1.0;
    for (int e = 1; e <= deg; ++e) pw[v][e] = pw[v][e - 1] * base;
  }
  double sum = 0.0;
  for (const auto& tm : p.raw_terms()) {
    double v = tm.second;
    for (int i = 0; i < dim; ++i) v *= pw[i][(tm.first >> slot_shift(i)) & 0xff];
    v *= pw[dim][tm.first & 0xff];
    sum += v;
  }
  return sum;
}

double evaluate_naive(const MVPoly& p, std::span<const double> x, double t) {
  double sum = 0.0;
  for (const Monomial& m : p.terms()) {
    double v = m.coeff;
    for (int i = 0; i < p.dim(); ++i) v *= std::pow(x[i], m.x[i]);
    v *= std::pow(t, m.t);
    sum += v;
  }
  return sum;
}

MVPoly compose_univariate(std::span<const double> coeffs, const MVPoly& q) {
  MVPoly r(q.dim());
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    r = r * q;
    r += MVPoly::constant(q.dim(), coeffs[k]);
  }
  return r;
}

MVPoly homogenize_ball_poly(const MVPoly& p, int m) {
  std::vector<MVPoly::Term> out;
  std::vector<int> ex;
  int te = 0;
  for (const auto& tm : p.raw_terms()) {
    MVPoly::unpack(tm.first, p.dim(), ex, te);
    if (te != 0) throw DegreeError("homogenization expects a polynomial in x only");
    int deg = 0;
    for (int e : ex) deg += e;
    if (deg > m) throw DegreeError("term degree exceeds homogenization degree");
    out.push_back({MVPoly::pack(ex, m - deg), tm.second});
  }
  return MVPoly::from_terms(p.dim(), std::move(out));
}

MVPoly norm_squared_x(int dim) {
  MVPoly r(dim);
  for (int i = 0; i < dim; ++i) {
    MVPoly xi = MVPoly::variable(dim, Variable::x(i));
    r += xi * xi;
  }
  return r;
}

MVPoly euler_x(const MVPoly& p) {
  MVPoly r(p.dim());
  for (int i = 0; i < p.dim(); ++i)
    r += MVPoly::variable(p.dim(), Variable::x(i)) * differentiate(p, Variable::x(i));
  return r;
}

MVPoly laplacian_x(const MVPoly& p) {
  MVPoly r(p.dim());
  for (int i = 0; i < p.dim(); ++i)
    r += differentiate(differentiate(p, Variable::x(i)), Variable::x(i));
  return r;
}

}  // namespace conekit
