#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert {

enum ExitCode { kExitOk = 0, kExitVerifyFailure = 1, kExitUsage = 2, kExitResourceCap = 3 };

// Entry point of the command-line tool; argv[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert
