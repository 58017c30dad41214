#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conekit/acceptance.hpp"
#include "conekit/cli.hpp"
#include "conekit/conebasis.hpp"
#include "conekit/conefourier.hpp"
#include "conekit/conekernels.hpp"
#include "conekit/coneops.hpp"
#include "conekit/errors.hpp"
#include "conekit/expr.hpp"
#include "conekit/scalar1d.hpp"

namespace py = pybind11;
using namespace conekit;

namespace {

ConePoint point(const std::vector<double>& x, double t) { return ConePoint{x, t}; }

double kernel(const ConeParams& p, int n, const std::vector<double>& x, double t, const std::vector<double>& y,
              double s, const std::string& route) {
  ConePoint a = point(x, t), b = point(y, s);
  require_in_domain(p, a);
  require_in_domain(p, b);
  if (route == "sum") return kernel_basis_sum(p, n, KernelKind::projection, a, b);
  if (route == "triangle") return kernel_triangle_route(p, n, a, b);
  if (route == "closed") return kernel_closed(p, n, a, b);
  if (route == "fourpoint") return kernel_fourpoint_d2(n, a, b);
  throw ConfigurationError("unknown route '" + route + "'");
}

}  // namespace

PYBIND11_MODULE(_conekit, m) {
  m.doc() = "orthogonal polynomials and kernels on cones";

  auto base = py::register_exception<Error>(m, "ConekitError", PyExc_RuntimeError);
  py::register_exception<ConfigurationError>(m, "ConfigurationError", base.ptr());
  py::register_exception<ParameterDomainError>(m, "ParameterDomainError", base.ptr());
  py::register_exception<CapabilityError>(m, "CapabilityError", base.ptr());
  py::register_exception<GeometryError>(m, "GeometryError", base.ptr());
  py::register_exception<SyntaxError>(m, "ExpressionSyntaxError", base.ptr());
  py::register_exception<NumericError>(m, "NumericError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  py::class_<ConeParams>(m, "ConeParams")
      .def_static("solid_jacobi", &ConeParams::solid_jacobi, py::arg("d"), py::arg("mu"), py::arg("beta"),
                  py::arg("gamma"))
      .def_static("solid_laguerre", &ConeParams::solid_laguerre, py::arg("d"), py::arg("mu"), py::arg("beta"))
      .def_static("surface_jacobi", &ConeParams::surface_jacobi, py::arg("d"), py::arg("beta"), py::arg("gamma"))
      .def_static("surface_laguerre", &ConeParams::surface_laguerre, py::arg("d"), py::arg("beta"))
      .def_readonly("d", &ConeParams::d)
      .def_readonly("mu", &ConeParams::mu)
      .def_readonly("beta", &ConeParams::beta)
      .def_readonly("gamma", &ConeParams::gamma)
      .def_property_readonly("family", [](const ConeParams& p) { return family_name(p.family); })
      .def_property_readonly("alpha", &ConeParams::alpha)
      .def("validate", &ConeParams::validate)
      .def("__repr__", [](const ConeParams& p) {
        return "ConeParams(" + family_name(p.family) + ", d=" + std::to_string(p.d) + ", mu=" +
               std::to_string(p.mu) + ", beta=" + std::to_string(p.beta) + ", gamma=" + std::to_string(p.gamma) + ")";
      });

  m.def("jacobi_p", &jacobi_p, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("x"));
  m.def("gegenbauer_z", &gegenbauer_z, py::arg("n"), py::arg("lam"), py::arg("x"));
  m.def("laguerre_l", &laguerre_l, py::arg("n"), py::arg("a"), py::arg("x"));
  m.def("critical_index", &critical_index);

  m.def(
      "cone_rule",
      [](const ConeParams& p, int order) {
        DomainRule r = cone_rule(p, order);
        std::vector<std::vector<double>> xs;
        std::vector<double> ts;
        for (const auto& q : r.points) {
          xs.push_back(q.x);
          ts.push_back(q.t);
        }
        return py::make_tuple(xs, ts, r.weights);
      },
      py::arg("params"), py::arg("order"), "(x, t, weights) of a normalized rule");

  m.def("degree_count", &degree_count);
  m.def(
      "basis_indices",
      [](const ConeParams& p, int max_degree) {
        std::vector<std::tuple<int, int, int>> out;
        for (const auto& e : cached_basis(p, max_degree)->elements()) out.emplace_back(e.n, e.m, e.inner);
        return out;
      },
      py::arg("params"), py::arg("max_degree"));
  m.def(
      "basis_values",
      [](const ConeParams& p, int max_degree, const std::vector<double>& x, double t) {
        ConePoint q = point(x, t);
        require_in_domain(p, q);
        std::vector<double> v;
        cached_basis(p, max_degree)->evaluate_all(q, v);
        return v;
      },
      py::arg("params"), py::arg("max_degree"), py::arg("x"), py::arg("t"));
  m.def(
      "gram_matrix",
      [](const ConeParams& p, int max_degree, int order) {
        return gram_matrix(p, max_degree, cone_rule(p, order > 0 ? order : 2 * max_degree));
      },
      py::arg("params"), py::arg("max_degree"), py::arg("order") = 0);

  m.def(
      "eigen_residuals",
      [](const ConeParams& p, int max_degree) {
        OperatorSpec spec = OperatorSpec::for_params(p);
        std::vector<double> out;
        for (const auto& e : cached_basis(p, max_degree)->elements()) out.push_back(eigen_residual(e, spec));
        return out;
      },
      py::arg("params"), py::arg("max_degree"));
  m.def("eigenvalue", [](const ConeParams& p, int n) { return OperatorSpec::for_params(p).eigenvalue(n); });

  m.def("kernel", &kernel, py::arg("params"), py::arg("n"), py::arg("x"), py::arg("t"), py::arg("y"), py::arg("s"),
        py::arg("route") = "closed");
  m.def(
      "summability_kernel",
      [](const ConeParams& p, int n, std::optional<double> delta, const std::vector<double>& x, double t,
         const std::vector<double>& y, double s) { return summability_kernel(p, n, delta, point(x, t), point(y, s)); },
      py::arg("params"), py::arg("n"), py::arg("delta"), py::arg("x"), py::arg("t"), py::arg("y"), py::arg("s"));
  m.def("apex_kernel_1d", &apex_kernel_1d, py::arg("params"), py::arg("n"), py::arg("delta"), py::arg("s"));
  m.def(
      "apex_lebesgue",
      [](int n, double delta, const ConeParams& p) { return apex_lebesgue(n, delta, p).value; }, py::arg("n"),
      py::arg("delta"), py::arg("params"));
  m.def(
      "lambda_coefficient",
      [](const std::function<double(double)>& g, int n, const ConeParams& p) { return lambda_coefficient(g, n, p); },
      py::arg("g"), py::arg("n"), py::arg("params"));

  m.def(
      "eval_expr",
      [](const std::string& text, const std::vector<double>& x, double t) { return evaluate_expr(parse_expr(text), x, t); },
      py::arg("text"), py::arg("x"), py::arg("t"));
  m.def("print_expr", [](const std::string& text) { return print_expr(parse_expr(text)); });

  m.def(
      "run_command_json",
      [](const std::string& command, py::dict opts) {
        RunConfig c;
        c.command = command;
        for (auto item : opts) {
          std::string k = py::str(item.first);
          py::handle v = item.second;
          if (k == "d") c.d = v.cast<int>();
          else if (k == "family") c.family = v.cast<std::string>();
          else if (k == "mu") c.mu = v.cast<double>();
          else if (k == "beta") c.beta = v.cast<double>();
          else if (k == "gamma") c.gamma = v.cast<double>();
          else if (k == "max_degree") c.max_degree = v.cast<int>();
          else if (k == "n") c.n = v.cast<int>();
          else if (k == "delta") c.deltas = v.cast<std::vector<double>>();
          else if (k == "routes") c.routes = v.cast<std::vector<std::string>>();
          else if (k == "f") c.f = v.cast<std::string>();
          else if (k == "quad_order") c.quad_order = v.cast<int>();
          else if (k == "criterion") c.criterion = v.cast<int>();
          else if (k == "seed") c.seed = v.cast<std::uint64_t>();
          else throw ConfigurationError("unknown option '" + k + "'");
        }
        py::gil_scoped_release release;
        return render_report(run_command(c), "json");
      },
      py::arg("command"), py::arg("options"));

  m.def(
      "run_criterion",
      [](int id, std::uint64_t seed) {
        CriterionResult r;
        {
          py::gil_scoped_release release;
          r = run_criterion(id, seed);
        }
        py::dict d;
        d["id"] = r.id;
        d["name"] = r.name;
        d["pass"] = r.pass;
        d["max_error"] = r.max_error;
        d["threshold"] = r.threshold;
        d["seconds"] = r.seconds;
        d["notes"] = r.notes;
        return d;
      },
      py::arg("id"), py::arg("seed") = kDefaultSeed);
}
