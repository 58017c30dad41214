#include "conekit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "conekit/conebasis.hpp"
#include "conekit/conefourier.hpp"
#include "conekit/conekernels.hpp"
#include "conekit/coneops.hpp"
#include "conekit/errors.hpp"
#include "conekit/expr.hpp"
#include "conekit/harmonics.hpp"
#include "conekit/scalar1d.hpp"

namespace conekit {

using json = nlohmann::json;

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<ConePoint> sample_points(const ConeParams& p, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<ConePoint> out;
  for (int i = 0; i < count; ++i) out.push_back(random_point(p, rng));
  return out;
}

ConeFunction user_function(const RunConfig& c) {
  Expr e = parse_expr(c.f);
  if (required_dimension(e) > c.d)
    throw ConfigurationError("expression uses x" + std::to_string(required_dimension(e)) + " but d = " +
                             std::to_string(c.d));
  return [e](const ConePoint& q) { return evaluate_expr(e, q); };
}

double rel_err(const std::vector<double>& ref, const std::vector<double>& v) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    num = std::max(num, std::abs(ref[i] - v[i]));
    den = std::max(den, std::abs(ref[i]));
  }
  return den > 0.0 ? num / den : num;
}

void run_basis(const RunConfig& c, Report& r) {
  ConeParams p = c.params();
  r.columns = {"n", "m", "inner", "norm", "poly"};
  for (const auto& e : cached_basis(p, c.max_degree)->elements())
    r.rows.push_back({std::int64_t{e.n}, std::int64_t{e.m}, std::int64_t{e.inner}, e.norm, e.poly.to_text()});
}

void run_gram(const RunConfig& c, Report& r) {
  ConeParams p = c.params();
  int order = c.quad_order > 0 ? c.quad_order : 2 * c.max_degree;
  DomainRule rule = cone_rule(p, order);
  Eigen::MatrixXd G = gram_matrix(p, c.max_degree, rule);
  const auto& els = cached_basis(p, c.max_degree)->elements();
  r.columns = {"index", "n", "m", "inner", "diagonal_error", "max_off_diagonal"};
  r.tolerance = 1e-10;
  double diag_max = 0.0;
  for (int i = 0; i < G.rows(); ++i) {
    double off = 0.0;
    for (int j = 0; j < G.cols(); ++j)
      if (j != i) off = std::max(off, std::abs(G(i, j)));
    double dg = std::abs(G(i, i) - 1.0);
    r.max_error = std::max(r.max_error, off);
    diag_max = std::max(diag_max, dg);
    const auto& e = els[static_cast<std::size_t>(i)];
    r.rows.push_back({std::int64_t{i}, std::int64_t{e.n}, std::int64_t{e.m}, std::int64_t{e.inner}, dg, off});
  }
  r.pass = r.max_error <= 1e-10 && diag_max <= 1e-11;
}

void run_eigen(const RunConfig& c, Report& r) {
  ConeParams p = c.params();
  OperatorSpec spec = OperatorSpec::for_params(p);
  spec.validate();
  r.columns = {"n", "m", "inner", "eigenvalue", "residual"};
  r.tolerance = 1e-9;
  for (const auto& e : cached_basis(p, c.max_degree)->elements()) {
    double res = eigen_residual(e, spec);
    r.max_error = std::max(r.max_error, res);
    r.rows.push_back({std::int64_t{e.n}, std::int64_t{e.m}, std::int64_t{e.inner}, spec.eigenvalue(e.n), res});
  }
  r.pass = r.max_error <= r.tolerance;
}

double route_value(const std::string& route, const ConeParams& p, int n, const ConePoint& a, const ConePoint& b,
                   int order) {
  if (route == "sum") return kernel_basis_sum(p, n, KernelKind::projection, a, b);
  if (route == "triangle") return kernel_triangle_route(p, n, a, b, order);
  if (route == "closed") return kernel_closed(p, n, a, b, order);
  return kernel_fourpoint_d2(n, a, b);
}

std::string params_label(const ConeParams& p) {
  std::ostringstream os;
  os << family_name(p.family) << " d=" << p.d << " mu=" << g17(p.mu) << " beta=" << g17(p.beta)
     << " gamma=" << g17(p.gamma);
  return os.str();
}

void run_kernel_compare(const RunConfig& c, Report& r) {
  ConeParams p = c.params();
  const std::string& ra = c.routes[0];
  const std::string& rb = c.routes[1];
  for (const std::string& route : c.routes)
    if (route == "fourpoint" && !(p.family == ConeFamily::surface_jacobi && p.d == 2 && p.beta == -1.0 &&
                                  p.gamma == -0.5))
      throw ConfigurationError("the fourpoint route needs surface-jacobi, d=2, beta=-1, gamma=-0.5");
  const int pairs = 20;
  std::vector<ConePoint> P = sample_points(p, c.seed, pairs), Q = sample_points(p, c.seed + 1, pairs);
  r.columns = {"route_a", "route_b", "n", "params", "max_rel_err", "points"};
  r.tolerance = 1e-8;
  for (int n = 0; n <= c.n; ++n) {
    std::vector<double> a(pairs), b(pairs);
    for (int i = 0; i < pairs; ++i) {
      a[static_cast<std::size_t>(i)] = route_value(ra, p, n, P[static_cast<std::size_t>(i)], Q[static_cast<std::size_t>(i)], c.quad_order);
      b[static_cast<std::size_t>(i)] = route_value(rb, p, n, P[static_cast<std::size_t>(i)], Q[static_cast<std::size_t>(i)], c.quad_order);
    }
    double e = rel_err(a, b);
    r.max_error = std::max(r.max_error, e);
    r.rows.push_back({ra, rb, std::int64_t{n}, params_label(p), e, std::int64_t{pairs}});
  }
  r.pass = r.max_error <= r.tolerance;
}

DomainRule expansion_rule(const RunConfig& c, const ConeParams& p) {
  return cone_rule(p, c.quad_order > 0 ? c.quad_order : 2 * c.max_degree + 8);
}

void run_project(const RunConfig& c, Report& r) {
  ConeParams p = c.params();
  ConeFunction f = user_function(c);
  DomainRule rule = expansion_rule(c, p);
  ExpansionCoefficients ec = expand(f, c.max_degree, p, rule);
  r.columns = {"n", "m", "inner", "coefficient"};
  for (const auto& [key, v] : ec.coeffs)
    r.rows.push_back({std::int64_t{std::get<0>(key)}, std::int64_t{std::get<1>(key)}, std::int64_t{std::get<2>(key)}, v});
  std::vector<ConePoint> pts = sample_points(p, c.seed, 5);
  r.tolerance = 1e-8;
  for (int n = 0; n <= c.max_degree; ++n) {
    std::vector<double> a = project(f, n, p, rule, pts, ProjectionRoute::coefficients);
    std::vector<double> b = project(f, n, p, rule, pts, ProjectionRoute::kernel);
    r.max_error = std::max(r.max_error, rel_err(a, b));
  }
  r.pass = r.max_error <= r.tolerance;
}

std::vector<double> deltas_or(const RunConfig& c, std::vector<double> fallback) {
  return c.deltas.empty() ? fallback : c.deltas;
}

void run_cesaro_table(const RunConfig& c, Report& r) {
  ConeParams p = c.params();
  ConeFunction f = user_function(c);
  double lam = critical_index(p);
  std::vector<double> deltas = deltas_or(c, {lam + 1.0});
  DomainRule rule = expansion_rule(c, p);
  std::vector<ConePoint> pts = sample_points(p, c.seed, 20);
  std::vector<double> fv;
  for (const auto& q : pts) fv.push_back(f(q));
  r.columns = {"n", "delta", "value"};
  for (double delta : deltas)
    for (int n = 0; n <= c.max_degree; ++n) {
      std::vector<double> s = cesaro_partial_sum(f, n, delta, p, rule, pts);
      double err = 0.0;
      for (std::size_t i = 0; i < pts.size(); ++i) err = std::max(err, std::abs(s[i] - fv[i]));
      r.rows.push_back({std::int64_t{n}, delta, err});
    }
  // route cross-check at the top degree
  std::vector<ConePoint> few(pts.begin(), pts.begin() + 3);
  std::vector<double> a = cesaro_partial_sum(f, c.max_degree, deltas[0], p, rule, few, SummationRoute::projections);
  std::vector<double> b = cesaro_partial_sum(f, c.max_degree, deltas[0], p, rule, few, SummationRoute::kernel);
  r.max_error = rel_err(a, b);
  r.tolerance = 1e-8;
  r.pass = r.max_error <= r.tolerance;
}

void run_lebesgue_table(const RunConfig& c, Report& r) {
  ConeParams p = c.params();
  double lam = critical_index(p);
  std::vector<double> deltas = deltas_or(c, {lam - 0.5, lam + 0.5});
  std::vector<int> degrees;
  for (int n = 1; n < c.max_degree; n *= 2) degrees.push_back(n);
  degrees.push_back(std::max(c.max_degree, 0));
  r.columns = {"n", "delta", "value"};
  r.tolerance = 1e-4;
  for (double delta : deltas)
    for (int n : degrees) {
      LebesgueResult L = apex_lebesgue(n, delta, p);
      double change = std::abs(L.value - L.previous) / std::max(std::abs(L.value), 1e-300);
      r.max_error = std::max(r.max_error, change);
      if (!L.converged) r.pass = false;
      r.rows.push_back({std::int64_t{n}, delta, L.value});
    }
  r.pass = r.pass && r.max_error <= r.tolerance;
}

void run_identities(const RunConfig& c, Report& r) {
  std::mt19937_64 rng(c.seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_real_distribution<double> ut(-1.0, 1.0);
  double add = 0.0;
  for (int d : {2, 3})
    for (int m = 0; m <= 12; ++m)
      for (int k = 0; k < 10; ++k) {
        std::vector<double> x(static_cast<std::size_t>(d)), y(static_cast<std::size_t>(d));
        for (auto* v : {&x, &y}) {
          for (double& e : *v) e = nd(rng);
          double s = norm2(*v);
          for (double& e : *v) e /= s;
        }
        add = std::max(add, verify_addition(d, m, x, y));
      }
  double zz = 0.0;
  for (double lam : {0.0, 0.25, 0.5, 1.0, 1.5})
    for (double sigma : {0.25, 0.5, 1.0, 1.5, 2.0})
      for (int m : {0, 2, 4, 6, 8})
        for (int k = 0; k < 10; ++k) zz = std::max(zz, index_raise_residual(lam, sigma, m, ut(rng)));
  double qt = 0.0;
  for (double lam : {0.25, 0.5, 1.0, 1.5, 2.0})
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= 10; ++k) qt = std::max(qt, quadratic_transform_residual(lam, n, -1.0 + 0.2 * k));
  r.columns = {"identity", "max_residual", "tolerance", "pass"};
  struct Row {
    const char* name;
    double value, tol;
  };
  for (Row row : {Row{"addition", add, 1e-12}, Row{"index_raise", zz, 1e-11}, Row{"quadratic_transform", qt, 1e-11}}) {
    bool ok = row.value <= row.tol;
    r.pass = r.pass && ok;
    r.max_error = std::max(r.max_error, row.value);
    r.rows.push_back({std::string(row.name), row.value, row.tol, ok});
  }
  r.tolerance = 1e-11;
}

void run_rule(const RunConfig& c, Report& r) {
  ConeParams p = c.params();
  DomainRule rule = cone_rule(p, c.quad_order > 0 ? c.quad_order : 2 * c.max_degree);
  r.columns = {"t"};
  for (int i = 1; i <= p.d; ++i) r.columns.push_back("x" + std::to_string(i));
  r.columns.push_back("weight");
  double total = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    std::vector<ReportCell> row{rule.points[j].t};
    for (double x : rule.points[j].x) row.push_back(x);
    row.push_back(rule.weights[j]);
    r.rows.push_back(std::move(row));
    total += rule.weights[j];
  }
  r.max_error = std::abs(total - 1.0);
  r.tolerance = 1e-12;
  r.pass = r.max_error <= r.tolerance;
}

void run_accept(const RunConfig& c, Report& r) {
  if (c.criterion < 0 || c.criterion > kCriterionCount)
    throw ConfigurationError("criterion must be in 0..10");
  std::vector<CriterionResult> res;
  if (c.criterion == 0) res = run_all_criteria(c.seed);
  else res.push_back(run_criterion(c.criterion, c.seed));
  r.columns = {"id", "name", "pass", "max_error", "threshold"};
  for (const auto& cr : res) {
    r.pass = r.pass && cr.pass;
    r.max_error = std::max(r.max_error, cr.max_error);
    r.rows.push_back({std::int64_t{cr.id}, cr.name, cr.pass, cr.max_error, cr.threshold});
  }
}

json cell_json(const ReportCell& c) {
  return std::visit([](const auto& v) { return json(v); }, c);
}

void write_json(std::ostream& os, const json& j, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << inner << json(it.key()).dump() << ": ";
      write_json(os, it.value(), indent + 1);
    }
    os << "\n" << pad << "}";
  } else if (j.is_array()) {
    // rows stay on one line each
    bool flat = std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
    if (flat) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        write_json(os, j[i], indent + 1);
      }
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << inner;
      write_json(os, j[i], indent + 1);
    }
    os << "\n" << pad << "]";
  } else if (j.is_number_float()) {
    double v = j.get<double>();
    if (std::isfinite(v)) os << g17(v);
    else os << "null";
  } else {
    os << j.dump();
  }
}

std::string csv_field(const ReportCell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) {
    if (s->find_first_of(",\"\n") == std::string::npos) return *s;
    std::string q = "\"";
    for (char ch : *s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  if (const auto* d = std::get_if<double>(&c)) return g17(*d);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::to_string(std::get<std::int64_t>(c));
}

}  // namespace

ConeParams RunConfig::params() const {
  ConeParams p;
  p.d = d;
  p.family = parse_family(family);
  p.mu = p.is_surface() ? 0.0 : mu;
  p.beta = beta;
  p.gamma = p.is_laguerre() ? 0.0 : gamma;
  try {
    p.validate();
  } catch (const ParameterDomainError& e) {
    throw ConfigurationError(e.what());
  }
  return p;
}

void RunConfig::validate() const {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end())
    throw ConfigurationError("unknown command '" + command + "'");
  if (format != "json" && format != "csv") throw ConfigurationError("format must be csv or json");
  if (max_degree < 0 || max_degree > 64) throw ConfigurationError("max-degree must be in 0..64");
  if (n < 0 || n > 64) throw ConfigurationError("n must be in 0..64");
  if (quad_order < 0) throw ConfigurationError("quad-order must be non-negative");
  for (double delta : deltas)
    if (!(delta >= 0.0)) throw ConfigurationError("delta values must be non-negative");
  if (command == "kernel-compare") {
    if (routes.size() != 2) throw ConfigurationError("routes takes exactly two names");
    for (const auto& r : routes)
      if (r != "sum" && r != "triangle" && r != "closed" && r != "fourpoint")
        throw ConfigurationError("unknown route '" + r + "'");
  }
  if (command != "identities" && command != "accept") params();
  if (command == "project" || command == "cesaro-table") {
    Expr e = parse_expr(f);
    if (required_dimension(e) > d) throw ConfigurationError("expression uses more coordinates than d");
  }
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"basis",         "gram",           "eigen",      "kernel-compare",
                                              "project",       "cesaro-table",   "lebesgue-table",
                                              "identities",    "rule",           "accept"};
  return names;
}

Report run_command(const RunConfig& config) {
  config.validate();
  Report r;
  r.config = config;
  const std::string& c = config.command;
  if (c == "basis") run_basis(config, r);
  else if (c == "gram") run_gram(config, r);
  else if (c == "eigen") run_eigen(config, r);
  else if (c == "kernel-compare") run_kernel_compare(config, r);
  else if (c == "project") run_project(config, r);
  else if (c == "cesaro-table") run_cesaro_table(config, r);
  else if (c == "lebesgue-table") run_lebesgue_table(config, r);
  else if (c == "identities") run_identities(config, r);
  else if (c == "rule") run_rule(config, r);
  else run_accept(config, r);
  return r;
}

std::string render_report(const Report& r, const std::string& format) {
  const RunConfig& c = r.config;
  std::ostringstream os;
  if (format == "csv") {
    os << "# conekit " << c.command << " seed=" << c.seed << " max_error=" << g17(r.max_error)
       << " pass=" << (r.pass ? "true" : "false") << "\n";
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
    os << "\n";
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
      os << "\n";
    }
    return os.str();
  }
  if (format != "json") throw ConfigurationError("format must be csv or json");
  json params = {{"d", c.d},
                 {"family", c.family},
                 {"mu", c.mu},
                 {"beta", c.beta},
                 {"gamma", c.gamma},
                 {"max_degree", c.max_degree},
                 {"n", c.n},
                 {"delta", c.deltas},
                 {"routes", c.routes},
                 {"f", c.f},
                 {"quad_order", c.quad_order},
                 {"criterion", c.criterion}};
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr = json::array();
    for (const auto& cell : row) jr.push_back(cell_json(cell));
    rows.push_back(jr);
  }
  json doc = {{"command", c.command}, {"params", params},       {"max_error", r.max_error},
              {"tolerance", r.tolerance}, {"pass", r.pass},     {"seed", c.seed},
              {"columns", r.columns},     {"rows", rows}};
  write_json(os, doc, 0);
  os << "\n";
  return os.str();
}

void emit_report(const Report& report, const std::string& format, const std::string& path) {
  std::string text = render_report(report, format);
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e)) return kExitIo;
  if (dynamic_cast<const ConfigurationError*>(&e) || dynamic_cast<const ParameterDomainError*>(&e) ||
      dynamic_cast<const CapabilityError*>(&e) || dynamic_cast<const SyntaxError*>(&e) ||
      dynamic_cast<const ShapeError*>(&e) || dynamic_cast<const DegreeError*>(&e) ||
      dynamic_cast<const IndexError*>(&e) || dynamic_cast<const ContractViolation*>(&e))
    return kExitConfig;
  return kExitTolerance;
}

}  // namespace conekit
