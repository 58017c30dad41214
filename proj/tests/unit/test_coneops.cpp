#include <doctest.h>

#include <cmath>

#include "conekit/conebasis.hpp"
#include "conekit/coneops.hpp"
#include "conekit/errors.hpp"

using namespace conekit;
using doctest::Approx;

TEST_SUITE("coneops") {
  TEST_CASE("eigenvalues") {
    CHECK(OperatorSpec::for_params(ConeParams::solid_jacobi(2, 0.5, 0.0, 0.5)).eigenvalue(3) == Approx(-3.0 * (3 + 1 + 0.5 + 2)));
    CHECK(OperatorSpec::for_params(ConeParams::solid_laguerre(3, 0.5, 0.0)).eigenvalue(4) == Approx(-4.0));
    CHECK(OperatorSpec::for_params(ConeParams::surface_jacobi(3, -1.0, 1.0)).eigenvalue(2) == Approx(-2.0 * (2 + 1 + 2)));
    CHECK(OperatorSpec::for_params(ConeParams::surface_laguerre(2, -1.0)).eigenvalue(5) == Approx(-5.0));
  }

  TEST_CASE("basis elements are eigenfunctions") {
    for (ConeParams p : {ConeParams::solid_jacobi(3, 0.0, 0.0, -0.5), ConeParams::solid_laguerre(2, 1.5, 0.0),
                         ConeParams::surface_jacobi(2, -1.0, 0.0), ConeParams::surface_laguerre(3, -1.0)}) {
      OperatorSpec spec = OperatorSpec::for_params(p);
      for (const auto& e : cached_basis(p, 6)->elements()) CHECK(eigen_residual(e, spec) <= 1e-9);
    }
  }

  TEST_CASE("finite differences agree with the exact operator") {
    ConeParams p = ConeParams::solid_jacobi(2, 0.5, 0.0, 0.5);
    OperatorSpec spec = OperatorSpec::for_params(p);
    ConeBasisElement e = basis_element(p, 3, 1, 1);
    MVPoly du = apply_operator(spec, e.poly);
    ScalarField f = [&](const std::vector<double>& x, double t) { return e.poly(x, t); };
    ConePoint q{{0.1, 0.15}, 0.5};
    CHECK(fd_apply(spec, f, q, 1e-3) == Approx(du(q.x, q.t)).epsilon(1e-7));
    CHECK_THROWS_AS(fd_apply(spec, f, ConePoint{{0.499, 0.0}, 0.5}, 1e-3), GeometryError);
  }

  TEST_CASE("theorem parameter checks") {
    ConeParams bad = ConeParams::solid_jacobi(2, 0.5, 1.0, 0.0);
    OperatorSpec spec = OperatorSpec::for_params(bad);
    CHECK_THROWS_AS(spec.validate(), ConfigurationError);
    CHECK_THROWS_AS(eigen_residual(basis_element(bad, 1, 0, 0), spec), ConfigurationError);
    // without the check the identity fails
    double worst = 0.0;
    for (const auto& e : cached_basis(bad, 3)->elements()) worst = std::max(worst, poly_residual(spec, e.poly, e.n));
    CHECK(worst > 1e-3);
    OperatorSpec surf = OperatorSpec::for_params(ConeParams::surface_jacobi(2, -1.0, 0.0));
    CHECK_THROWS_AS(apply_operator(surf, MVPoly::constant(2, 1.0)), CapabilityError);
  }
}
