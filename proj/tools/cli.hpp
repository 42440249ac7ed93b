#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heegaard::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kNoSolution = 2, kIoError = 3 };

/// Runs one command line (without the program name). Documents go to
/// --out when given, otherwise to `out` with the report on `err`.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heegaard::cli
