#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpalg {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitAccuracy = 3 };

/// Runs the command line `args` (without the program name). Results go to
/// --out when given, otherwise to `out`; failures are written to `out` as
/// {"error": {...}} objects.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace fpalg
