#include <doctest.h>

#include <json.hpp>

#include "conekit/cli.hpp"
#include "conekit/errors.hpp"

using namespace conekit;

TEST_SUITE("cli") {
  TEST_CASE("gram example") {
    RunConfig c;
    c.command = "gram";
    c.d = 2;
    c.mu = 0.5;
    c.beta = 0.0;
    c.gamma = 0.5;
    c.max_degree = 6;
    Report r = run_command(c);
    CHECK(r.pass);
    CHECK(r.max_error <= 1e-10);
    auto j = nlohmann::json::parse(render_report(r, "json"));
    for (const char* k : {"command", "params", "max_error", "pass", "seed"}) CHECK(j.contains(k));
    CHECK(j["command"] == "gram");
  }

  TEST_CASE("kernel-compare and eigen examples") {
    RunConfig k;
    k.command = "kernel-compare";
    k.n = 8;
    k.routes = {"sum", "closed"};
    Report rk = run_command(k);
    CHECK(rk.pass);
    CHECK(rk.max_error <= 1e-8);
    std::string csv = render_report(rk, "csv");
    CHECK(csv.find("\nroute_a,route_b,n,params,max_rel_err,points\n") != std::string::npos);

    RunConfig e;
    e.command = "eigen";
    e.family = "surface-jacobi";
    e.beta = -1.0;
    e.gamma = 0.0;
    e.max_degree = 8;
    Report re = run_command(e);
    CHECK(re.pass);
    CHECK(re.max_error <= 1e-9);
  }

  TEST_CASE("deterministic output") {
    RunConfig c;
    c.command = "project";
    c.max_degree = 3;
    c.seed = 11;
    CHECK(render_report(run_command(c), "json") == render_report(run_command(c), "json"));
    CHECK(render_report(run_command(c), "csv") == render_report(run_command(c), "csv"));
  }

  TEST_CASE("configuration errors map to exit code 2") {
    RunConfig c;
    c.command = "eigen";
    c.family = "surface-jacobi";
    c.beta = 0.0;
    try {
      run_command(c);
      FAIL("expected a configuration error");
    } catch (const std::exception& ex) {
      CHECK(exit_code_for(ex) == kExitConfig);
    }
    c.command = "nope";
    CHECK_THROWS_AS(run_command(c), ConfigurationError);
    c.command = "project";
    c.f = "x1 + * t";
    CHECK_THROWS_AS(run_command(c), SyntaxError);
    CHECK(exit_code_for(IoError("x")) == kExitIo);
  }

  TEST_CASE("I/O errors name the path") {
    RunConfig c;
    c.command = "identities";
    Report r = run_command(c);
    try {
      emit_report(r, "csv", "/nonexistent-dir/out.csv");
      FAIL("expected an I/O error");
    } catch (const IoError& e) {
      CHECK(std::string(e.what()).find("/nonexistent-dir/out.csv") != std::string::npos);
    }
  }
}
