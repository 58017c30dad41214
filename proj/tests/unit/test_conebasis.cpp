#include <doctest.h>

#include <cmath>

#include "conekit/conebasis.hpp"
#include "conekit/scalar1d.hpp"

using namespace conekit;
using doctest::Approx;

TEST_SUITE("conebasis") {
  TEST_CASE("degree counts") {
    // solid: homogeneous polynomials of degree n in d+1 variables
    for (int d : {1, 2, 3})
      for (int n = 0; n <= 6; ++n)
        CHECK(degree_count(ConeParams::solid_jacobi(d, 0.5, 0.0, 0.0), n) ==
              static_cast<int>(std::lround(binomial(n + d, d))));
    // surface: 2n+1 for d = 2, (n+1)^2 for d = 3
    for (int n = 0; n <= 6; ++n) {
      CHECK(degree_count(ConeParams::surface_jacobi(2, 0.0, 0.0), n) == 2 * n + 1);
      CHECK(degree_count(ConeParams::surface_jacobi(3, 0.0, 0.0), n) == (n + 1) * (n + 1));
    }
    CHECK(cached_basis(ConeParams::solid_jacobi(2, 0.5, 0.0, 0.0), 6)->elements().size() == 84);
  }

  TEST_CASE("Gram matrix is the identity") {
    for (ConeParams p : {ConeParams::solid_jacobi(2, 0.5, 0.0, 0.5), ConeParams::solid_laguerre(3, 0.0, 1.0),
                         ConeParams::surface_jacobi(3, -1.0, -0.5), ConeParams::surface_laguerre(2, 1.0)}) {
      Eigen::MatrixXd G = gram_matrix(p, 4, cone_rule(p, 8));
      CHECK((G - Eigen::MatrixXd::Identity(G.rows(), G.cols())).cwiseAbs().maxCoeff() < 1e-11);
    }
  }

  TEST_CASE("elements are polynomials that vanish nowhere special at the apex") {
    ConeParams p = ConeParams::solid_jacobi(2, 0.5, 0.0, 0.0);
    auto basis = cached_basis(p, 3);
    ConePoint apex{{0.0, 0.0}, 0.0};
    std::vector<double> vals;
    basis->evaluate_all(apex, vals);
    const auto& els = basis->elements();
    for (std::size_t i = 0; i < els.size(); ++i) {
      CHECK(vals[i] == Approx(els[i].evaluate(apex)).epsilon(1e-13));
      std::vector<double> x{0.0, 0.0};
      CHECK(vals[i] == Approx(els[i].poly(x, 0.0)).epsilon(1e-13));
      if (els[i].m > 0) CHECK(std::abs(vals[i]) < 1e-15);
    }
  }

  TEST_CASE("evaluate_all matches the stored polynomial") {
    ConeParams p = ConeParams::solid_jacobi(3, 1.5, 1.0, -0.5);
    auto basis = cached_basis(p, 4);
    ConePoint q{{0.1, -0.2, 0.3}, 0.8};
    std::vector<double> vals;
    basis->evaluate_all(q, vals);
    const auto& els = basis->elements();
    for (std::size_t i = 0; i < els.size(); ++i) CHECK(vals[i] == Approx(els[i].poly(q.x, q.t)).epsilon(1e-11));
  }

  TEST_CASE("index errors") {
    ConeParams p = ConeParams::solid_jacobi(2, 0.5, 0.0, 0.0);
    CHECK_THROWS(basis_element(p, 2, 3, 0));
    CHECK_THROWS(basis_element(p, 2, 1, 5));
  }
}
