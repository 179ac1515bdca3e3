#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mstdp::cli {

/// Exit statuses of the `mstdp` tool.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,         // unreadable file, parse or validation failure, bad arguments
  kPreconditionError = 2,  // algorithm called outside its domain
  kDisagreement = 3,       // compare/bench found differing results
};

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mstdp::cli
