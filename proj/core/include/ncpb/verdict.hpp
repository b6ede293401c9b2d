#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ncpb {

/// Outcome of an exhaustive check: pass, or the first violation found.
struct Verdict {
  bool ok = true;
  std::string detail;                 // human-readable failure, empty on success
  std::vector<std::size_t> witness;   // indices of the violating basis tuple/group tuple, if any

  static Verdict pass() { return {}; }
  static Verdict fail(std::string detail, std::vector<std::size_t> witness = {}) {
    return Verdict{false, std::move(detail), std::move(witness)};
  }
  explicit operator bool() const noexcept { return ok; }
};

}  // namespace ncpb
