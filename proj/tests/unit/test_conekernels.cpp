#include <doctest.h>

#include <cmath>
#include <random>

#include "conekit/conekernels.hpp"
#include "conekit/errors.hpp"

using namespace conekit;
using doctest::Approx;

namespace {
double rel(double a, double b, double scale) { return std::abs(a - b) / std::max(std::abs(a), scale); }
}

TEST_SUITE("conekernels") {
  TEST_CASE("routes agree") {
    std::mt19937_64 rng(3);
    for (ConeParams p : {ConeParams::solid_jacobi(2, 0.5, 0.0, 0.5), ConeParams::solid_jacobi(3, 0.0, 1.0, -0.5),
                         ConeParams::surface_jacobi(2, -1.0, 0.0), ConeParams::surface_jacobi(3, 0.5, 1.0)})
      for (int n = 0; n <= 5; ++n)
        for (int k = 0; k < 3; ++k) {
          ConePoint a = random_point(p, rng), b = random_point(p, rng);
          double s = kernel_basis_sum(p, n, KernelKind::projection, a, b);
          double scale = kernel_basis_sum(p, n, KernelKind::projection, a, a);
          CHECK(rel(s, kernel_closed(p, n, a, b), scale) < 1e-10);
          CHECK(rel(s, kernel_triangle_route(p, n, a, b), scale) < 1e-10);
        }
  }

  TEST_CASE("Laguerre triangle route") {
    std::mt19937_64 rng(4);
    ConeParams p = ConeParams::solid_laguerre(2, 0.5, 0.0);
    for (int n = 0; n <= 4; ++n) {
      ConePoint a = random_point(p, rng), b = random_point(p, rng);
      double s = kernel_basis_sum(p, n, KernelKind::projection, a, b);
      CHECK(rel(s, kernel_triangle_route(p, n, a, b), std::abs(kernel_basis_sum(p, n, KernelKind::projection, a, a))) < 1e-9);
    }
  }

  TEST_CASE("four-point formula") {
    CHECK(fourpoint_constant() == Approx(0.25).epsilon(1e-14));
    std::mt19937_64 rng(5);
    ConeParams p = ConeParams::surface_jacobi(2, -1.0, -0.5);
    for (int n = 0; n <= 10; n += 2) {
      ConePoint a = random_point(p, rng), b = random_point(p, rng);
      double s = kernel_basis_sum(p, n, KernelKind::projection, a, b);
      CHECK(rel(s, kernel_fourpoint_d2(n, a, b), kernel_basis_sum(p, n, KernelKind::projection, a, a)) < 1e-10);
    }
  }

  TEST_CASE("apex reduction") {
    ConeParams p = ConeParams::solid_jacobi(2, 0.5, 0.0, 0.5);
    ConePoint apex{{0.0, 0.0}, 0.0};
    ConePoint q{{0.1, 0.2}, 0.6};
    for (int n : {0, 3, 9}) {
      double ref = apex_kernel_1d(p, n, std::nullopt, q.t);
      CHECK(summability_kernel(p, n, std::nullopt, apex, q) == Approx(ref).epsilon(1e-10));
      CHECK(kernel_basis_sum(p, n, KernelKind::partial_sum, apex, q) == Approx(ref).epsilon(1e-10));
    }
    CHECK(critical_index(p) == Approx(2.0 * 0.5 + 0.0 + 0.5 + 2.0));
    CHECK(critical_index(ConeParams::surface_jacobi(3, 0.5, 1.0)) == Approx(4.5));
  }

  TEST_CASE("request validation") {
    KernelRequest r;
    r.params = ConeParams::solid_jacobi(2, 0.5, 0.0, 0.0);
    r.n = 4;
    r.route = KernelRoute::fourpoint_d2;
    CHECK_THROWS_AS(r.validate(), ParameterDomainError);
    r.route = KernelRoute::closed_form;
    r.quad_order = 2;
    CHECK_THROWS_AS(r.validate(), ConfigurationError);
    r.quad_order = 0;
    r.n = -1;
    CHECK_THROWS(r.validate());
  }
}
