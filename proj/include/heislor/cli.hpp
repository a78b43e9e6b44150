#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heislor::cli {

/// Exit status of execute().
enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,  ///< exterior target, inadmissible plan, solver failure, ...
  kUsageError = 2,   ///< unknown flag, bad value, missing subcommand
};

/// Runs one command line (program name excluded). Results go to `out` unless
/// `--output` names a file; diagnostics go to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heislor::cli
