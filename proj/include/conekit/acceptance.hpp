#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conekit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double max_error = 0.0;
  double threshold = 0.0;
  double seconds = 0.0;
  double time_limit = 0.0;  // 0 when no runtime bound applies
  std::vector<std::string> notes;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_all_criteria(std::uint64_t seed = kDefaultSeed);

std::string format_result_line(const CriterionResult& r);

}  // namespace conekit
