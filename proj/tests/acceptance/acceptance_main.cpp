#include <cstdio>
#include <cstring>

#include "ncpb_tools/cross_check.hpp"

// One line per criterion. A criterion passes only if its checks pass and it
// finishes within its pinned wall-time limit.
int main(int argc, char** argv) {
  ncpb::tools::CrossCheckOptions options;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--full") == 0) options.full = true;
  int failures = 0;
  for (int id = 1; id <= ncpb::tools::kCriterionCount; ++id) {
    auto r = ncpb::tools::run_criterion(id, options);
    bool ok = r.status == ncpb::tools::Status::pass && r.seconds <= r.limit_seconds;
    std::string detail = r.detail;
    if (r.status == ncpb::tools::Status::pass && !ok) detail = "exceeded the time limit";
    std::printf("[%s] criterion %2d %-48s %7.2fs (limit %gs, %zu checks)%s%s\n", ok ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds, r.limit_seconds, r.transcript.size(), detail.empty() ? "" : ": ",
                detail.c_str());
    if (!ok) ++failures;
  }
  std::printf("%d of %d criteria passed\n", ncpb::tools::kCriterionCount - failures, ncpb::tools::kCriterionCount);
  return failures == 0 ? 0 : 1;
}
