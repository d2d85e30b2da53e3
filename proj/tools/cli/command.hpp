#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace inflatable::cli {

enum class Status { ok, error, inadmissible };

// Process exit codes, one per failure class.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitPrecondition = 4,
  kExitResource = 5,
  kExitIo = 6,
};

struct CommandResult {
  Status status = Status::ok;
  nlohmann::ordered_json payload;
  std::vector<std::string> diagnostics;
  int exit_code = kExitOk;
};

/// Runs one subcommand. `args` excludes the program name, so args[0] is the
/// subcommand. Output goes to `out`, diagnostics to `err`.
CommandResult run(const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err);

}  // namespace inflatable::cli
