#include <doctest.h>

#include <array>

#include "conekit/polyalg.hpp"

using namespace conekit;
using doctest::Approx;

TEST_SUITE("polyalg") {
  TEST_CASE("arithmetic and coefficients") {
    MVPoly x1 = MVPoly::variable(2, Variable::x(0));
    MVPoly t = MVPoly::variable(2, Variable::t());
    MVPoly p = (x1 + t) * (x1 + t);
    std::array<int, 2> e{1, 0};
    CHECK(p.coefficient(e, 1) == Approx(2.0));
    CHECK(p.degree() == 2);
    CHECK(p.size() == 3);
    CHECK((p - p).is_zero());
    std::array<double, 2> x{2.0, 5.0};
    CHECK(p(x, 3.0) == Approx(25.0));
    CHECK(evaluate_naive(p, x, 3.0) == Approx(25.0));
  }

  TEST_CASE("text round trip") {
    MVPoly x2 = MVPoly::variable(3, Variable::x(1));
    MVPoly t = MVPoly::variable(3, Variable::t());
    MVPoly p = 0.5 * x2 * x2 * t - 3.0 * t + MVPoly::constant(3, 1.25);
    CHECK(MVPoly::from_text(3, p.to_text()) == p);
  }

  TEST_CASE("differentiation and Laplacian") {
    MVPoly x1 = MVPoly::variable(2, Variable::x(0));
    MVPoly x2 = MVPoly::variable(2, Variable::x(1));
    MVPoly p = x1 * x1 * x1 + x1 * x2 * x2;
    std::array<int, 2> e20{2, 0}, e02{0, 2};
    MVPoly d1 = differentiate(p, Variable::x(0));
    CHECK(d1.coefficient(e20, 0) == Approx(3.0));
    CHECK(d1.coefficient(e02, 0) == Approx(1.0));
    MVPoly lap = laplacian_x(p);
    std::array<int, 2> e10{1, 0};
    CHECK(lap.coefficient(e10, 0) == Approx(8.0));
    CHECK(euler_x(p) == 3.0 * p);
  }

  TEST_CASE("homogenization makes t^m p(x/t)") {
    MVPoly x1 = MVPoly::variable(1, Variable::x(0));
    MVPoly p = x1 * x1 + MVPoly::constant(1, 2.0);
    MVPoly h = homogenize_ball_poly(p, 2);
    std::array<double, 1> x{0.6};
    CHECK(h(x, 2.0) == Approx(0.36 + 8.0));
  }
}
