#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matchstick::cli {

/// Exit codes: 0 success, 1 domain failure, 2 input error, 3 precondition
/// violation.
enum ExitCode : int { kOk = 0, kDomainFailure = 1, kInputError = 2, kPrecondition = 3 };

/// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace matchstick::cli
