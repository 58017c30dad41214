#include <doctest.h>

#include <cmath>

#include "conekit/harmonics.hpp"
#include "conekit/quaddomains.hpp"

using namespace conekit;
using doctest::Approx;

TEST_SUITE("harmonics") {
  TEST_CASE("dimensions") {
    CHECK(harmonic_dimension(2, 0) == 1);
    CHECK(harmonic_dimension(2, 5) == 2);
    CHECK(harmonic_dimension(3, 4) == 9);
    CHECK(harmonic_basis(3, 3).size() == 7);
  }

  TEST_CASE("orthonormal on the sphere") {
    DomainRule r = make_rule(DomainSpec::sphere(3), 10);
    auto basis = harmonic_basis(3, 3);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        double v = r.integrate([&](const ConePoint& p) { return basis[i].evaluate(p.x) * basis[j].evaluate(p.x); });
        CHECK(std::abs(v - (i == j ? 1.0 : 0.0)) < 1e-13);
      }
  }

  TEST_CASE("recurrence matches polynomial form") {
    std::vector<double> x{0.3, -0.5, 0.2};
    auto vals = harmonic_values(3, 4, x);
    auto basis = harmonic_basis(3, 4);
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(vals[i] == Approx(basis[i].evaluate(x)).epsilon(1e-13));
  }

  TEST_CASE("addition formula") {
    std::vector<double> x{0.6, 0.8}, y{0.0, 1.0};
    for (int m = 0; m <= 12; ++m) CHECK(verify_addition(2, m, x, y) <= 1e-12);
    std::vector<double> a{1.0, 0.0, 0.0}, b{0.0, 0.6, 0.8};
    for (int m = 0; m <= 12; ++m) CHECK(verify_addition(3, m, a, b) <= 1e-12);
  }

  TEST_CASE("ball basis eigenfunctions") {
    for (const auto& e : ball_basis(2, 1.0, 3)) {
      MVPoly lhs = ball_operator(e.poly, 1.0);
      double lam = -3.0 * (3.0 + 2.0 * 1.0 + 2.0 - 1.0);
      CHECK((lhs - lam * e.poly).max_abs_coefficient() <= 1e-10 * std::abs(lam) * e.poly.max_abs_coefficient());
    }
  }
}
