#pragma once

#include <functional>
#include <vector>

#include "conekit/conebasis.hpp"
#include "conekit/polyalg.hpp"
#include "conekit/quaddomains.hpp"

namespace conekit {

enum class OperatorKind { solid_jacobi, solid_laguerre, surface_jacobi, surface_laguerre };

struct OperatorSpec {
  OperatorKind kind = OperatorKind::solid_jacobi;
  ConeParams params;

  static OperatorSpec for_params(const ConeParams& params);
  double eigenvalue(int n) const;
  bool is_surface() const;
  void validate() const;
};

MVPoly apply_operator(const OperatorSpec& spec, const MVPoly& u);

// radial part of D(g(t) t^m Y); univariate coefficients in t
std::vector<double> apply_surface_operator(const OperatorSpec& spec, const std::vector<double>& g,
                                           int m);
// same with the full radial profile f = g t^m given directly
std::vector<double> apply_surface_operator_radial(const OperatorSpec& spec,
                                                  const std::vector<double>& f, int m);

double eigen_residual(const ConeBasisElement& element, const OperatorSpec& spec);
// ||D u - lambda(n) u|| / ||lambda(n) u||, no family or beta checks
double poly_residual(const OperatorSpec& spec, const MVPoly& u, int n);

using ScalarField = std::function<double(const std::vector<double>&, double)>;

double fd_apply(const OperatorSpec& spec, const ScalarField& f, const ConePoint& point,
                double step = 1e-3, bool richardson = true);

}  // namespace conekit
