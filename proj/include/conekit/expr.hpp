#pragma once

#include <memory>
#include <string>
#include <vector>

#include "conekit/quaddomains.hpp"

namespace conekit {

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

enum class ExprKind { constant, variable, unary, binary };

struct ExprNode {
  ExprKind kind = ExprKind::constant;
  double value = 0.0;
  int variable = 0;  // 0..2 for x1..x3, 3 for t
  std::string op;    // "neg", "exp", ..., or one of + - * / ^
  Expr lhs;
  Expr rhs;
};

inline constexpr int kVariableT = 3;

// throws SyntaxError with line and column
Expr parse_expr(const std::string& text);

// canonical text; binary operations fully parenthesized
std::string print_expr(const Expr& e);

// throws NumericError on sqrt of a negative, division by zero or a non-finite result,
// ShapeError when x has too few coordinates
double evaluate_expr(const Expr& e, const std::vector<double>& x, double t);
inline double evaluate_expr(const Expr& e, const ConePoint& p) { return evaluate_expr(e, p.x, p.t); }

// number of x coordinates the expression needs (0 if none)
int required_dimension(const Expr& e);

}  // namespace conekit
