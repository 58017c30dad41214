#include <doctest.h>

#include "conekit/errors.hpp"
#include "conekit/expr.hpp"

using namespace conekit;
using doctest::Approx;

TEST_SUITE("expr") {
  TEST_CASE("examples") {
    CHECK(evaluate_expr(parse_expr("x1^2 + t"), {2.0, 0.0}, 3.0) == Approx(7.0));
    CHECK(evaluate_expr(parse_expr("exp(-t)*x2"), {0.0, 1.0}, 0.0) == Approx(1.0));
  }

  TEST_CASE("syntax error position") {
    try {
      parse_expr("x1 + * t");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 6);
    }
    try {
      parse_expr("x1 +\n  foo(t)");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_expr("(x1 + t"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("sin x1"), SyntaxError);
    CHECK_THROWS_AS(parse_expr(""), SyntaxError);
  }

  TEST_CASE("precedence") {
    std::vector<double> x{2.0};
    CHECK(evaluate_expr(parse_expr("-x1^2"), x, 0.0) == Approx(-4.0));
    CHECK(evaluate_expr(parse_expr("2^3^2"), x, 0.0) == Approx(512.0));
    CHECK(evaluate_expr(parse_expr("1 - 2 - 3"), x, 0.0) == Approx(-4.0));
    CHECK(evaluate_expr(parse_expr("8 / 4 / 2"), x, 0.0) == Approx(1.0));
    CHECK(evaluate_expr(parse_expr("2 + 3 * x1"), x, 0.0) == Approx(8.0));
    CHECK(evaluate_expr(parse_expr("2^-1"), x, 0.0) == Approx(0.5));
  }

  TEST_CASE("print and parse round trip") {
    for (const char* s : {"x1^2 + t", "exp(-t)*x2", "sqrt(abs(x3 - 0.1)) / (1 + cos(pi*t))", "-(-x1)"}) {
      std::string once = print_expr(parse_expr(s));
      CHECK(print_expr(parse_expr(once)) == once);
    }
  }

  TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS(evaluate_expr(parse_expr("sqrt(t - 1)"), {0.0}, 0.5), NumericError);
    CHECK_THROWS_AS(evaluate_expr(parse_expr("1 / x1"), {0.0}, 0.5), NumericError);
    CHECK_THROWS_AS(evaluate_expr(parse_expr("x3"), {0.0, 0.0}, 0.5), ShapeError);
    CHECK(required_dimension(parse_expr("x2 + t")) == 2);
  }
}
