#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "conekit/quaddomains.hpp"
#include "conekit/scalar1d.hpp"

namespace conekit {

enum class KernelKind { projection, partial_sum, cesaro };
enum class KernelRoute { basis_sum, triangle_integral, closed_form, fourpoint_d2 };

struct KernelRequest {
  ConeParams params;
  int n = 0;
  KernelKind kind = KernelKind::projection;
  double delta = 0.0;
  KernelRoute route = KernelRoute::basis_sum;
  int quad_order = 0;  // nodes per axis; 0 means n + 2

  void validate() const;
};

double evaluate_kernel(const KernelRequest& req, const ConePoint& p, const ConePoint& q);

double kernel_basis_sum(const ConeParams& params, int n, KernelKind kind, const ConePoint& p,
                        const ConePoint& q, double delta = 0.0);

// kernel on V^2 for (t^2-u^2)^{alpha-1/2}(1-t)^gamma at ((u,t),(s,s))
double triangle_kernel_diag(double alpha, double gamma, int n, double u, double t, double s);

// Integration over the auxiliary variables that turn <x,y> into the scalar a = zeta * s.
// Each node carries a weight and the coefficients of <x,y>, sqrt(t^2-|x|^2) sqrt(s^2-|y|^2)
// and ts in a.
class Translation {
 public:
  Translation(const ConeParams& params, int order);

  const ConeParams& params() const { return params_; }
  int order() const { return order_; }
  // index of the 1-D Gegenbauer weight, 2 alpha + gamma + 1
  double lambda() const { return 2.0 * params_.alpha() + params_.gamma + 1.0; }

  // a values and weights for the pair (p, q)
  void scalar_nodes(const ConePoint& p, const ConePoint& q, std::vector<double>& a,
                    std::vector<double>& w) const;
  // T g(p, q); g need not be even here
  double apply(const std::function<double(double)>& g, const ConePoint& p, const ConePoint& q) const;
  // P_n through the triangle kernel composed with the stage-one integration
  double triangle(int n, const ConePoint& p, const ConePoint& q) const;

 private:
  struct Node {
    double w, c_xy, c_rr, c_ts;
  };
  ConeParams params_;
  int order_;
  std::vector<Node> stage1_;
  QuadRule1D v1_, v2_;
};

double kernel_closed(const ConeParams& params, int n, const ConePoint& p, const ConePoint& q,
                     int order = 0);
double kernel_triangle_route(const ConeParams& params, int n, const ConePoint& p,
                             const ConePoint& q, int order = 0);

// d = 2 surface, beta = -1, gamma = -1/2
double fourpoint_constant();
double kernel_fourpoint_d2(int n, const ConePoint& p, const ConePoint& q);
// the four arguments with st - <x,y> in two of them and no prefactor
double kernel_fourpoint_d2_printed(int n, const ConePoint& p, const ConePoint& q);

// K_n (delta absent) or K_n^delta through T[k_n^delta(w_{lambda-1/2,-1/2}; 2v^2-1, 1)]
double summability_kernel(const ConeParams& params, int n, std::optional<double> delta,
                          const ConePoint& p, const ConePoint& q, int order = 0);
// k_n^delta(w_{2alpha,gamma}; 1-2s, 1)
double apex_kernel_1d(const ConeParams& params, int n, std::optional<double> delta, double s);

// critical Cesaro index 2 alpha + gamma + 1
double critical_index(const ConeParams& params);

}  // namespace conekit
