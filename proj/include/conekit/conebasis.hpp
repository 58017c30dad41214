#pragma once

#include <Eigen/Dense>

#include <memory>
#include <vector>

#include "conekit/harmonics.hpp"
#include "conekit/polyalg.hpp"
#include "conekit/quaddomains.hpp"

namespace conekit {

struct ConeBasisElement {
  ConeParams params;
  int n = 0;
  int m = 0;
  int inner = 0;
  MVPoly poly{2};
  double norm = 1.0;

  // radial polynomial of degree n-m in t times the homogenized angular factor;
  // on the surface the angular factor is a harmonic stored as a ball element with m = 0
  double radial_a = 0.0;
  double radial_b = 0.0;
  BallBasisElement angular_factor;

  double radial(double t) const;
  double angular(const ConePoint& p) const;
  double evaluate(const ConePoint& p) const { return radial(p.t) * angular(p); }
};

int inner_count(const ConeParams& params, int m);
int degree_count(const ConeParams& params, int n);

double basis_norm(const ConeParams& params, int n, int m);
ConeBasisElement basis_element(const ConeParams& params, int n, int m, int inner);

// All elements up to max_degree in canonical (n, m, inner) order.
class ConeBasis {
 public:
  ConeBasis(const ConeParams& params, int max_degree);

  const ConeParams& params() const { return params_; }
  int max_degree() const { return max_degree_; }
  const std::vector<ConeBasisElement>& elements() const { return elements_; }
  // [begin, end) of the elements of total degree n
  std::pair<std::size_t, std::size_t> degree_range(int n) const;

  // values of every element at p, with factors shared across elements
  void evaluate_all(const ConePoint& p, std::vector<double>& out) const;

 private:
  ConeParams params_;
  int max_degree_;
  std::vector<ConeBasisElement> elements_;
  std::vector<std::size_t> offsets_;
};

std::shared_ptr<const ConeBasis> cached_basis(const ConeParams& params, int max_degree);

Eigen::MatrixXd gram_matrix(const ConeParams& params, int max_degree, const DomainRule& rule);

}  // namespace conekit
