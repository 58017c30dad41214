#pragma once

#include <cstdint>
#include <exception>
#include <string>
#include <variant>
#include <vector>

#include "conekit/acceptance.hpp"
#include "conekit/quaddomains.hpp"

namespace conekit {

struct RunConfig {
  std::string command;
  int d = 2;
  std::string family = "solid-jacobi";
  double mu = 0.5;
  double beta = 0.0;
  double gamma = 0.0;
  int max_degree = 6;
  int n = 8;
  std::vector<double> deltas;  // empty: command default
  std::vector<std::string> routes{"sum", "closed"};
  std::string f = "exp(-t) + x1^2";
  int quad_order = 0;  // 0: command default
  int criterion = 0;   // accept: 0 runs all
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "json";

  // throws ConfigurationError / ParameterDomainError
  ConeParams params() const;
  void validate() const;
};

using ReportCell = std::variant<std::int64_t, double, std::string, bool>;

struct Report {
  RunConfig config;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::vector<std::string> columns;
  std::vector<std::vector<ReportCell>> rows;
};

const std::vector<std::string>& command_names();

Report run_command(const RunConfig& config);

// deterministic text: sorted JSON keys, floats printed with %.17g
std::string render_report(const Report& report, const std::string& format);
// empty path or "-" writes to stdout; throws IoError naming the path
void emit_report(const Report& report, const std::string& format, const std::string& path);

// 0 pass, 1 tolerance failure, 2 configuration error, 3 I/O error
inline constexpr int kExitPass = 0;
inline constexpr int kExitTolerance = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;
int exit_code_for(const std::exception& e);

}  // namespace conekit
