#pragma once

#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "conekit/scalar1d.hpp"

namespace conekit {

enum class ConeFamily { cone_jacobi, cone_laguerre, surface_jacobi, surface_laguerre };

std::string family_name(ConeFamily f);
ConeFamily parse_family(const std::string& name);

struct ConeParams {
  int d = 2;
  double mu = 0.5;
  double beta = 0.0;
  double gamma = 0.0;
  ConeFamily family = ConeFamily::cone_jacobi;

  static ConeParams solid_jacobi(int d, double mu, double beta, double gamma);
  static ConeParams solid_laguerre(int d, double mu, double beta);
  static ConeParams surface_jacobi(int d, double beta, double gamma);
  static ConeParams surface_laguerre(int d, double beta);

  bool is_surface() const;
  bool is_laguerre() const;
  double alpha() const;
  // exponent of t in the radial weight
  double radial_exponent() const { return 2.0 * alpha(); }
  void validate() const;
  bool operator==(const ConeParams&) const = default;
};

struct ConePoint {
  std::vector<double> x;
  double t = 0.0;
};

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& a);

enum class DomainKind { sphere, ball, triangle_v2, cone_solid, cone_surface };

struct DomainSpec {
  DomainKind kind = DomainKind::cone_solid;
  int d = 2;
  double mu = 0.5;
  double alpha = 0.5;
  double gamma = 0.0;
  ConeParams params;

  static DomainSpec sphere(int d);
  static DomainSpec ball(int d, double mu);
  static DomainSpec triangle_v2(double alpha, double gamma);
  static DomainSpec cone(const ConeParams& p);
};

// Weights are normalized: the normalization constant b is absorbed so sum(weights) = 1.
struct DomainRule {
  DomainKind kind = DomainKind::cone_solid;
  std::vector<ConePoint> points;
  std::vector<double> weights;
  int exact_degree = 0;
  ConeParams params;

  std::size_t size() const { return points.size(); }
  double integrate(const std::function<double(const ConePoint&)>& f) const;
  void write_csv(std::ostream& os) const;
};

DomainRule make_rule(const DomainSpec& domain, int order);
DomainRule cone_rule(const ConeParams& params, int order);

double sphere_area(int d);
double ball_constant(int d, double mu);
double normalization_constant(const ConeParams& params);

double inner_product(const std::function<double(const ConePoint&)>& f,
                     const std::function<double(const ConePoint&)>& g, const ConeParams& params,
                     const DomainRule& rule);

// membership checks with a relative tolerance
bool in_domain(const ConeParams& params, const ConePoint& p, double tol = 1e-12);
void require_in_domain(const ConeParams& params, const ConePoint& p);

// random point of the domain; Laguerre families draw t from (0, t_max)
ConePoint random_point(const ConeParams& params, std::mt19937_64& rng, double t_max = 6.0);

}  // namespace conekit
