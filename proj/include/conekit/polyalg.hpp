#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conekit {

inline constexpr int kMaxPolyDim = 5;
inline constexpr int kMaxExponent = 255;

// Variable index 0..d-1 for x_1..x_d; Variable::t() for the cone variable.
struct Variable {
  int index = -1;
  static Variable x(int i) { return Variable{i}; }
  static Variable t() { return Variable{-1}; }
  bool is_t() const { return index < 0; }
};

struct Monomial {
  std::vector<int> x;
  int t = 0;
  double coeff = 0.0;
};

// Sparse polynomial in (x_1..x_d, t); terms kept sorted in graded-lex order, t last.
class MVPoly {
 public:
  using Key = std::uint64_t;
  using Term = std::pair<Key, double>;

  explicit MVPoly(int dim = 1);

  static MVPoly constant(int dim, double c);
  static MVPoly variable(int dim, Variable v);
  static MVPoly monomial(int dim, std::span<const int> x_exp, int t_exp, double coeff = 1.0);

  int dim() const { return dim_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& raw_terms() const { return terms_; }
  std::vector<Monomial> terms() const;
  double coefficient(std::span<const int> x_exp, int t_exp) const;
  double max_abs_coefficient() const;

  double operator()(std::span<const double> x, double t) const;

  MVPoly operator-() const;
  MVPoly& operator+=(const MVPoly& q);
  MVPoly& operator-=(const MVPoly& q);
  MVPoly& operator*=(double c);

  friend MVPoly operator+(MVPoly p, const MVPoly& q) { return p += q; }
  friend MVPoly operator-(MVPoly p, const MVPoly& q) { return p -= q; }
  friend MVPoly operator*(const MVPoly& p, const MVPoly& q);
  friend MVPoly operator*(MVPoly p, double c) { return p *= c; }
  friend MVPoly operator*(double c, MVPoly p) { return p *= c; }

  bool operator==(const MVPoly& q) const { return dim_ == q.dim_ && terms_ == q.terms_; }

  std::string to_text() const;
  static MVPoly from_text(int dim, std::string_view text);

  static Key pack(std::span<const int> x_exp, int t_exp);
  static void unpack(Key key, int dim, std::vector<int>& x_exp, int& t_exp);
  static MVPoly from_terms(int dim, std::vector<Term> terms);

 private:
  int dim_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };

MVPoly arith(ArithOp op, const MVPoly& p, const MVPoly& q);
MVPoly scale(const MVPoly& p, double c);
MVPoly differentiate(const MVPoly& p, Variable v);
double evaluate(const MVPoly& p, std::span<const double> x, double t);
double evaluate_naive(const MVPoly& p, std::span<const double> x, double t);
MVPoly compose_univariate(std::span<const double> coeffs, const MVPoly& q);
MVPoly homogenize_ball_poly(const MVPoly& p, int m);

// ||x||^2, sum_i x_i d_i p, and the x-Laplacian
MVPoly norm_squared_x(int dim);
MVPoly euler_x(const MVPoly& p);
MVPoly laplacian_x(const MVPoly& p);

}  // namespace conekit
