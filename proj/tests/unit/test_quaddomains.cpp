#include <doctest.h>

#include <random>

#include "conekit/errors.hpp"
#include "conekit/quaddomains.hpp"

using namespace conekit;
using doctest::Approx;

TEST_SUITE("quaddomains") {
  TEST_CASE("normalized cone rules") {
    for (ConeParams p : {ConeParams::solid_jacobi(2, 0.5, 0.0, 0.0), ConeParams::solid_jacobi(3, 1.5, 1.0, -0.5),
                         ConeParams::surface_jacobi(2, -1.0, 0.0), ConeParams::surface_laguerre(3, 0.0)}) {
      DomainRule r = cone_rule(p, 6);
      CHECK(r.integrate([](const ConePoint&) { return 1.0; }) == Approx(1.0).epsilon(1e-14));
      for (const auto& q : r.points) CHECK(in_domain(p, q));
    }
  }

  TEST_CASE("uniform measures") {
    // uniform solid cone in R^3: density of t is 3 t^2
    DomainRule solid = cone_rule(ConeParams::solid_jacobi(2, 0.5, 0.0, 0.0), 4);
    CHECK(solid.integrate([](const ConePoint& q) { return q.t; }) == Approx(0.75).epsilon(1e-14));
    // lateral surface with beta = -1, gamma = 0: t uniform
    DomainRule surf = cone_rule(ConeParams::surface_jacobi(2, -1.0, 0.0), 4);
    CHECK(surf.integrate([](const ConePoint& q) { return q.t; }) == Approx(0.5).epsilon(1e-14));
    CHECK(surf.integrate([](const ConePoint& q) { return q.x[0] * q.x[0]; }) ==
          Approx(0.5 * (1.0 / 3.0)).epsilon(1e-14));
  }

  TEST_CASE("random points stay in the domain") {
    std::mt19937_64 rng(7);
    for (ConeParams p : {ConeParams::solid_jacobi(3, 0.5, 0.0, 0.0), ConeParams::surface_jacobi(2, 0.0, 0.0),
                         ConeParams::solid_laguerre(2, 0.5, 0.0)})
      for (int i = 0; i < 50; ++i) CHECK(in_domain(p, random_point(p, rng)));
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ConeParams::solid_jacobi(2, -0.5, 0.0, 0.0).validate(), ParameterDomainError);
    CHECK_THROWS_AS(ConeParams::solid_jacobi(2, 0.5, 0.0, -1.0).validate(), ParameterDomainError);
    CHECK_THROWS_AS(ConeParams::surface_jacobi(1, 0.0, 0.0).validate(), ParameterDomainError);
    CHECK_THROWS_AS(parse_family("cylinder"), ConfigurationError);
    CHECK(parse_family(family_name(ConeFamily::surface_laguerre)) == ConeFamily::surface_laguerre);
    ConeParams p = ConeParams::solid_jacobi(2, 0.5, 0.0, 0.0);
    CHECK_THROWS_AS(require_in_domain(p, ConePoint{{0.9, 0.0}, 0.5}), GeometryError);
    CHECK_THROWS_AS(require_in_domain(p, ConePoint{{0.1}, 0.5}), ShapeError);
  }
}
