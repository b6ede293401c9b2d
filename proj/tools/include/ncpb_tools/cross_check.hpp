#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncpb/errors.hpp"
#include "ncpb/serialization.hpp"

namespace ncpb::tools {

enum class Status { pass, fail, refused };

const char* status_name(Status s);

struct CrossCheckOptions {
  bool full = false;                       // quick skips clock-shift n = 5 and the C3 x C3 cohomology row
  std::uint64_t budget = kDefaultBudget;   // 0 refuses every enumeration criterion
};

struct CriterionResult {
  int id = 0;
  std::string title;
  Status status = Status::fail;
  std::string detail;                  // first failure, or the refusal reason
  std::vector<std::string> transcript;
  double seconds = 0;                  // wall time; kept out of the JSON
  double limit_seconds = 0;
};

/// Runs criterion id in 1..10. Never throws; errors become a fail line.
CriterionResult run_criterion(int id, const CrossCheckOptions& options);
std::vector<CriterionResult> run_cross_check(const CrossCheckOptions& options);

/// Deterministic report without timing.
Json cross_check_json(const std::vector<CriterionResult>& results);

inline constexpr int kCriterionCount = 10;

}  // namespace ncpb::tools
