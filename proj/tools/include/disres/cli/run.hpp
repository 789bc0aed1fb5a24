#pragma once

#include <optional>
#include <string>
#include <vector>

namespace disres::cli {

struct CommandRequest {
  /// hermite, shiftset, reduce, dres, dresplus, summable, vspace, telescope, galois-diag
  std::string command;
  std::vector<std::string> inputs;
  bool json = false;
  std::string var = "x";
  std::optional<unsigned> beta;
  unsigned long trial_division_bound = 1000000;
};

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Exit codes: 0 success, 2 parse error, 3 domain error, 4 internal failure.
CommandResult run(const CommandRequest& request);

const std::vector<std::string>& command_names();

}  // namespace disres::cli
