#include "conekit/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "conekit/errors.hpp"

namespace conekit {

namespace {

const char* const kFunctions[] = {"exp", "sin", "cos", "sqrt", "abs"};

Expr make_constant(double v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::constant;
  n->value = v;
  return n;
}

Expr make_variable(int i) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::variable;
  n->variable = i;
  return n;
}

Expr make_unary(const std::string& op, Expr a) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::unary;
  n->op = op;
  n->lhs = std::move(a);
  return n;
}

Expr make_binary(char op, Expr a, Expr b) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::binary;
  n->op = std::string(1, op);
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Expr run() {
    Expr e = sum();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(msg, line, col);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr sum() {
    Expr e = product();
    for (;;) {
      if (accept('+')) e = make_binary('+', e, product());
      else if (accept('-')) e = make_binary('-', e, product());
      else return e;
    }
  }

  Expr product() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) e = make_binary('*', e, unary());
      else if (accept('/')) e = make_binary('/', e, unary());
      else return e;
    }
  }

  Expr unary() {
    if (accept('-')) return make_unary("neg", unary());
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept('^')) return make_binary('^', base, unary());
    return base;
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(std::string("unexpected '") + c + "'");
  }

  Expr number() {
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    return make_constant(v);
  }

  Expr identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string id = s_.substr(start, pos_ - start);
    if (id == "t") return make_variable(kVariableT);
    if (id == "x1" || id == "x2" || id == "x3") return make_variable(id[1] - '1');
    if (id == "pi") return make_constant(std::numbers::pi);
    for (const char* f : kFunctions) {
      if (id == f) {
        if (!accept('(')) fail("expected '(' after " + id);
        Expr arg = sum();
        if (!accept(')')) fail("expected ')'");
        return make_unary(id, arg);
      }
    }
    fail_at("unknown identifier '" + id + "'", start);
  }
};

double checked(double v) {
  if (!std::isfinite(v)) throw NumericError("expression evaluates to a non-finite value");
  return v;
}

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const Expr& e) {
  switch (e->kind) {
    case ExprKind::constant: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", e->value);
      return buf;
    }
    case ExprKind::variable:
      return e->variable == kVariableT ? "t" : "x" + std::to_string(e->variable + 1);
    case ExprKind::unary:
      if (e->op == "neg") return "(-" + print_expr(e->lhs) + ")";
      return e->op + "(" + print_expr(e->lhs) + ")";
    case ExprKind::binary:
      return "(" + print_expr(e->lhs) + " " + e->op + " " + print_expr(e->rhs) + ")";
  }
  return {};
}

double evaluate_expr(const Expr& e, const std::vector<double>& x, double t) {
  switch (e->kind) {
    case ExprKind::constant:
      return e->value;
    case ExprKind::variable:
      if (e->variable == kVariableT) return t;
      if (static_cast<std::size_t>(e->variable) >= x.size())
        throw ShapeError("x" + std::to_string(e->variable + 1) + " is not defined in dimension " +
                         std::to_string(x.size()));
      return x[static_cast<std::size_t>(e->variable)];
    case ExprKind::unary: {
      double a = evaluate_expr(e->lhs, x, t);
      if (e->op == "neg") return -a;
      if (e->op == "exp") return checked(std::exp(a));
      if (e->op == "sin") return std::sin(a);
      if (e->op == "cos") return std::cos(a);
      if (e->op == "abs") return std::abs(a);
      if (a < 0.0) throw NumericError("sqrt of a negative value");
      return std::sqrt(a);
    }
    case ExprKind::binary: {
      double a = evaluate_expr(e->lhs, x, t), b = evaluate_expr(e->rhs, x, t);
      switch (e->op[0]) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/':
          if (b == 0.0) throw NumericError("division by zero");
          return a / b;
        default:
          return checked(std::pow(a, b));
      }
    }
  }
  return 0.0;
}

int required_dimension(const Expr& e) {
  switch (e->kind) {
    case ExprKind::variable:
      return e->variable == kVariableT ? 0 : e->variable + 1;
    case ExprKind::unary:
      return required_dimension(e->lhs);
    case ExprKind::binary:
      return std::max(required_dimension(e->lhs), required_dimension(e->rhs));
    default:
      return 0;
  }
}

}  // namespace conekit
