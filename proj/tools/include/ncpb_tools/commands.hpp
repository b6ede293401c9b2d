#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ncpb/serialization.hpp"

namespace ncpb::tools {

/// Exit codes of the command-line workbench.
enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitRefused = 2, kExitUsage = 3 };

/// {command, status: ok | fail | refused, payload, transcript}. Timing is never
/// part of the report.
struct Report {
  std::string command;
  std::string status = "ok";
  Json payload = Json::object();
  std::vector<std::string> transcript;

  Json to_json() const;
  int exit_code() const;
};

/// Parses argv, runs the command and prints the report (or a usage error) to out.
/// Diagnostics and optional timing go to err. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncpb::tools
