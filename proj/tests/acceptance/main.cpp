#include <cstdio>
#include <cstdlib>
#include <string>

#include "conekit/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = conekit::kDefaultSeed;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "-v") verbose = true;
    else seed = std::strtoull(argv[i], nullptr, 10);
  }
  int failed = 0;
  for (int id = 1; id <= conekit::kCriterionCount; ++id) {
    conekit::CriterionResult r = conekit::run_criterion(id, seed);
    std::printf("%s\n", conekit::format_result_line(r).c_str());
    if (verbose || !r.pass)
      for (const auto& n : r.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
