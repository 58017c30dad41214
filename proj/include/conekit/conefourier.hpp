#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "conekit/conekernels.hpp"
#include "conekit/polyalg.hpp"
#include "conekit/quaddomains.hpp"

namespace conekit {

using ConeFunction = std::function<double(const ConePoint&)>;
using EvenFunction = std::function<double(double)>;

// nodes per axis used by the translation when g is not a polynomial of known degree
inline constexpr int kDefaultTranslationOrder = 16;

// throws ContractViolation when g has an odd part above 1e-12 on a probe grid
void require_even(const EvenFunction& g);

double translate(const EvenFunction& g, const ConePoint& p, const ConePoint& q,
                 const ConeParams& params, int order = kDefaultTranslationOrder);

// Lambda_n(g): coefficient of Z_{2n}^{lambda} in g, lambda = 2 alpha + gamma + 1
double lambda_coefficient(const EvenFunction& g, int n, const ConeParams& params, int nodes = 0);

// (f * g)(p) for every output point, integrating over the rule
std::vector<double> convolve(const ConeFunction& f, const EvenFunction& g, const ConeParams& params,
                             const DomainRule& rule, const std::vector<ConePoint>& points,
                             int order = kDefaultTranslationOrder);

struct ExpansionCoefficients {
  ConeParams params;
  int max_degree = 0;
  std::map<std::tuple<int, int, int>, double> coeffs;
  double residual_norm = 0.0;

  double evaluate(const ConePoint& p, std::optional<int> only_degree = std::nullopt) const;
};

// coefficients <f, e>/norm(e) for all elements up to max_degree
ExpansionCoefficients expand(const ConeFunction& f, int max_degree, const ConeParams& params,
                             const DomainRule& rule);

enum class ProjectionRoute { kernel, coefficients };

// proj_n f at the given points
std::vector<double> project(const ConeFunction& f, int n, const ConeParams& params,
                            const DomainRule& rule, const std::vector<ConePoint>& points,
                            ProjectionRoute route = ProjectionRoute::coefficients);
// polynomial input: the rule must integrate f times degree-n polynomials exactly
std::vector<double> project_polynomial(const MVPoly& f, int n, const ConeParams& params,
                                       const DomainRule& rule, const std::vector<ConePoint>& points,
                                       ProjectionRoute route = ProjectionRoute::coefficients);

enum class SummationRoute { kernel, projections };

// S_n f (delta absent) or S_n^delta f at the points
std::vector<double> cesaro_partial_sum(const ConeFunction& f, int n, std::optional<double> delta,
                                       const ConeParams& params, const DomainRule& rule,
                                       const std::vector<ConePoint>& points,
                                       SummationRoute route = SummationRoute::projections);

struct LebesgueResult {
  double value = 0.0;
  double previous = 0.0;
  int order = 0;
  bool converged = false;
};

// b int |K_n^delta(p, q)| W(q) dq with order doubling until the relative change is below 1e-4
LebesgueResult lebesgue_function(const ConePoint& p, int n, double delta, const ConeParams& params,
                                 int start_order = 0);
// same quantity at the apex through the 1-D reduction
LebesgueResult apex_lebesgue(int n, double delta, const ConeParams& params, int start_nodes = 0);

// ||T g(p, .)||_{L^1(W)} and ||g||_{L^1(w_lambda)}
std::pair<double, double> translation_l1_bound(const EvenFunction& g, const ConePoint& p,
                                               const ConeParams& params, const DomainRule& rule,
                                               int order = kDefaultTranslationOrder);

// norms on the cone and on [-1,1] with the Gegenbauer weight; exponent infinity allowed
double cone_norm(const std::vector<double>& values, const DomainRule& rule, double p);
double weight_norm(const EvenFunction& g, double lambda, double p, int nodes = 64);

struct YoungResult {
  double lhs = 0.0;
  double rhs = 0.0;
};

// (||f*g||_p, ||f||_q ||g||_r); needs 1/p = 1/r + 1/q - 1
YoungResult check_young(const ConeFunction& f, const EvenFunction& g, double p, double q, double r,
                        const ConeParams& params, const DomainRule& rule,
                        int order = kDefaultTranslationOrder);

}  // namespace conekit
