#include <doctest.h>

#include <cmath>

#include "conekit/errors.hpp"
#include "conekit/scalar1d.hpp"

using namespace conekit;
using doctest::Approx;

TEST_SUITE("scalar1d") {
  TEST_CASE("classical values") {
    CHECK(jacobi_p(2, 0.0, 0.0, 0.5) == Approx(-0.125).epsilon(1e-15));
    CHECK(gegenbauer_c(2, 1.0, 0.3) == Approx(-0.64).epsilon(1e-15));
    CHECK(laguerre_l(2, 0.0, 1.0) == Approx(-0.5).epsilon(1e-15));
    CHECK(chebyshev_t(3, 0.5) == Approx(-1.0).epsilon(1e-15));
    CHECK(gegenbauer_z(1, 1.0, 0.5) == Approx(2.0).epsilon(1e-15));
    CHECK(gegenbauer_z(0, 0.7, 0.2) == Approx(1.0));
  }

  TEST_CASE("lambda = 0 is the Chebyshev branch") {
    CHECK(gegenbauer_z(2, 0.0, 0.5) == Approx(-1.0).epsilon(1e-15));
    CHECK(gegenbauer_z(3, 0.0, 0.3) == Approx(2.0 * chebyshev_t(3, 0.3)).epsilon(1e-15));
    CHECK(std::abs(gegenbauer_z(4, 1e-9, 0.3) - gegenbauer_z(4, 0.0, 0.3)) < 1e-7);
  }

  TEST_CASE("normalized Gauss rules") {
    QuadRule1D g = gegenbauer_measure(0.5, 6);
    double s = 0.0;
    for (double w : g.weights) s += w;
    CHECK(s == Approx(1.0).epsilon(1e-15));
    CHECK(g.integrate([](double x) { return x * x; }) == Approx(1.0 / 3.0).epsilon(1e-14));
    for (double lam : {0.25, 1.0, 2.5}) {
      QuadRule1D r = gegenbauer_measure(lam, 5);
      CHECK(r.integrate([](double x) { return x * x; }) == Approx(1.0 / (2.0 * lam + 2.0)).epsilon(1e-14));
    }
    QuadRule1D j = jacobi_measure(1.5, 0.5, 5);
    CHECK(j.integrate([](double x) { return x; }) == Approx((0.5 - 1.5) / 4.0).epsilon(1e-14));
    QuadRule1D l = gauss_rule(WeightSpec::laguerre(2.0), 6);
    CHECK(l.integrate([](double x) { return x; }) == Approx(3.0).epsilon(1e-13));
  }

  TEST_CASE("orthogonality under the rules") {
    QuadRule1D r = jacobi_measure(0.3, -0.4, 12);
    for (int i = 0; i <= 6; ++i)
      for (int k = 0; k <= 6; ++k) {
        double v = r.integrate([&](double x) { return jacobi_p(i, 0.3, -0.4, x) * jacobi_p(k, 0.3, -0.4, x); });
        if (i == k) CHECK(v == Approx(jacobi_norm(i, 0.3, -0.4)).epsilon(1e-12));
        else CHECK(std::abs(v) < 1e-13);
      }
  }

  TEST_CASE("identity examples") {
    CHECK(index_raise_residual(0.5, 0.5, 2, 0.3) <= 1e-12);
    CHECK(quadratic_transform_residual(1.0, 2, 0.7) <= 1e-13);
    CHECK(verify_1d_identities(Identity1D::index_raise, {1.0, 0.5, 4, -0.2}) <= 1e-12);
  }

  TEST_CASE("Cesaro weights") {
    for (double w : cesaro_weights(5, 0.0)) CHECK(w == Approx(1.0));
    std::vector<double> w = cesaro_weights(2, 1.0);
    CHECK(w[0] == Approx(1.0));
    CHECK(w[1] == Approx(2.0 / 3.0));
    CHECK(w[2] == Approx(1.0 / 3.0));
  }

  TEST_CASE("Gegenbauer coefficient picks out one term") {
    QuadRule1D r = gegenbauer_measure(1.5, 20);
    auto g = [](double x) { return 3.0 * gegenbauer_z(4, 1.5, x) - gegenbauer_z(2, 1.5, x); };
    CHECK(gegenbauer_coefficient(g, 4, 1.5, r) == Approx(3.0).epsilon(1e-13));
    CHECK(gegenbauer_coefficient(g, 2, 1.5, r) == Approx(-1.0).epsilon(1e-13));
    CHECK(std::abs(gegenbauer_coefficient(g, 3, 1.5, r)) < 1e-13);
  }

  TEST_CASE("boundary limits are point masses") {
    QuadRule1D g = gegenbauer_measure(-0.5, 4);
    CHECK(g.integrate([](double x) { return x * x + x; }) == Approx(1.0));
    QuadRule1D j = jacobi_measure(-1.0, 0.5, 4);
    CHECK(j.integrate([](double x) { return x; }) == Approx(1.0));
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(gauss_rule(WeightSpec::jacobi(-1.0, 0.0), 3), ParameterDomainError);
    CHECK_THROWS_AS(jacobi_measure(-1.5, 0.0, 3), ParameterDomainError);
    CHECK_THROWS_AS(jacobi_measure(-1.0, -1.0, 3), ParameterDomainError);
    CHECK_THROWS_AS(gegenbauer_measure(-0.7, 3), ParameterDomainError);
    CHECK_THROWS_AS(jacobi_p(-1, 0.0, 0.0, 0.1), ParameterDomainError);
  }
}
