#include <doctest.h>

#include <cmath>

#include "conekit/conefourier.hpp"
#include "conekit/errors.hpp"
#include "conekit/scalar1d.hpp"

using namespace conekit;
using doctest::Approx;

TEST_SUITE("conefourier") {
  TEST_CASE("Lambda_n of Z_2k") {
    ConeParams p = ConeParams::solid_jacobi(2, 0.5, 0.0, 0.5);
    double lam = critical_index(p);
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= 4; ++k)
        CHECK(std::abs(lambda_coefficient([&](double x) { return gegenbauer_z(2 * k, lam, x); }, n, p) -
                       (n == k ? 1.0 : 0.0)) < 1e-12);
  }

  TEST_CASE("projection routes and reproduction of polynomials") {
    ConeParams p = ConeParams::solid_jacobi(2, 0.5, 0.0, 0.0);
    DomainRule rule = cone_rule(p, 10);
    ConeFunction f = [](const ConePoint& q) { return q.t * q.t - q.x[0] + 0.5 * q.x[1] * q.t; };
    std::vector<ConePoint> pts{{{0.1, 0.2}, 0.5}, {{0.0, 0.0}, 0.0}, {{-0.3, 0.1}, 0.9}};
    std::vector<double> total(pts.size(), 0.0);
    for (int n = 0; n <= 2; ++n) {
      auto a = project(f, n, p, rule, pts, ProjectionRoute::coefficients);
      auto b = project(f, n, p, rule, pts, ProjectionRoute::kernel);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(a[i] == Approx(b[i]).epsilon(1e-11));
        total[i] += a[i];
      }
    }
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(total[i] == Approx(f(pts[i])).epsilon(1e-12));
  }

  TEST_CASE("convolution with Z_2n is the projection") {
    ConeParams p = ConeParams::surface_jacobi(2, -1.0, 0.0);
    double lam = critical_index(p);
    DomainRule rule = cone_rule(p, 10);
    ConeFunction f = [](const ConePoint& q) { return std::exp(q.t) + q.x[0]; };
    std::vector<ConePoint> pts{{{0.3, 0.4}, 0.5}};
    for (int n = 0; n <= 3; ++n) {
      auto lhs = convolve(f, [&](double x) { return gegenbauer_z(2 * n, lam, x); }, p, rule, pts, n + 2);
      auto rhs = project(f, n, p, rule, pts);
      CHECK(lhs[0] == Approx(rhs[0]).epsilon(1e-9));
    }
  }

  TEST_CASE("Cesaro sums reproduce constants") {
    ConeParams p = ConeParams::solid_jacobi(2, 0.5, 0.0, 0.0);
    DomainRule rule = cone_rule(p, 8);
    std::vector<ConePoint> pts{{{0.1, 0.2}, 0.5}};
    ConeFunction one = [](const ConePoint&) { return 1.0; };
    CHECK(cesaro_partial_sum(one, 3, 2.0, p, rule, pts)[0] == Approx(1.0).epsilon(1e-12));
    CHECK(cesaro_partial_sum(one, 3, 2.0, p, rule, pts, SummationRoute::kernel)[0] == Approx(1.0).epsilon(1e-10));
  }

  TEST_CASE("contracts") {
    ConeParams p = ConeParams::solid_jacobi(2, 0.5, 0.0, 0.0);
    CHECK_THROWS_AS(require_even([](double x) { return x; }), ContractViolation);
    CHECK_NOTHROW(require_even([](double x) { return std::cos(x); }));
    DomainRule rule = cone_rule(p, 4);
    ConeFunction f = [](const ConePoint&) { return 1.0; };
    EvenFunction g = [](double) { return 1.0; };
    CHECK_THROWS_AS(check_young(f, g, 2.0, 2.0, 2.0, p, rule, 4), ParameterDomainError);
    CHECK_THROWS_AS(check_young(f, g, 0.5, 1.0, 0.5, p, rule, 4), ParameterDomainError);
    YoungResult y = check_young(f, g, 1.0, 1.0, 1.0, p, rule, 4);
    CHECK(y.lhs <= y.rhs * (1.0 + 1e-12));
    CHECK_THROWS_AS(apex_lebesgue(4, 1.0, ConeParams::solid_laguerre(2, 0.5, 0.0)), CapabilityError);
  }

  TEST_CASE("norms") {
    ConeParams p = ConeParams::solid_jacobi(2, 0.5, 0.0, 0.0);
    DomainRule rule = cone_rule(p, 4);
    std::vector<double> v(rule.size(), -2.0);
    CHECK(cone_norm(v, rule, 1.0) == Approx(2.0));
    CHECK(cone_norm(v, rule, 3.0) == Approx(2.0));
    CHECK(cone_norm(v, rule, INFINITY) == Approx(2.0));
    CHECK(weight_norm([](double) { return 3.0; }, 1.5, 2.0) == Approx(3.0));
  }
}
