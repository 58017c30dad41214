#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "conekit/cli.hpp"
#include "conekit/errors.hpp"

int main(int argc, char** argv) {
  conekit::RunConfig cfg;
  CLI::App app{"Orthogonal polynomials, kernels and Cesaro means on cones"};
  app.set_config("--config", "", "flat key=value file; command-line flags take precedence");

  std::string commands;
  for (const auto& c : conekit::command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", cfg.command, "one of: " + commands)->required();
  app.add_option("--d", cfg.d, "spatial dimension (1..3)");
  app.add_option("--family", cfg.family, "solid-jacobi, solid-laguerre, surface-jacobi, surface-laguerre");
  app.add_option("--mu", cfg.mu);
  app.add_option("--beta", cfg.beta);
  app.add_option("--gamma", cfg.gamma);
  app.add_option("--max-degree", cfg.max_degree);
  app.add_option("--n", cfg.n, "kernel degree");
  app.add_option("--delta", cfg.deltas, "Cesaro orders, comma separated")->delimiter(',');
  app.add_option("--routes", cfg.routes, "two of sum, triangle, closed, fourpoint")->delimiter(',');
  app.add_option("--f", cfg.f, "test function in x1..x3 and t");
  app.add_option("--quad-order", cfg.quad_order);
  app.add_option("--criterion", cfg.criterion, "accept: criterion id, 0 for all");
  app.add_option("--seed", cfg.seed);
  app.add_option("--out", cfg.out, "output path, stdout when absent");
  app.add_option("--format", cfg.format, "csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    std::cerr << e.what() << "\n";
    return conekit::kExitIo;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : conekit::kExitConfig;
  }

  try {
    conekit::Report report = conekit::run_command(cfg);
    conekit::emit_report(report, cfg.format, cfg.out);
    if (!report.pass) {
      std::cerr << "tolerance failure: max_error " << report.max_error << " > " << report.tolerance << "\n";
      return conekit::kExitTolerance;
    }
    return conekit::kExitPass;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return conekit::exit_code_for(e);
  }
}
