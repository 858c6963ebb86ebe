#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plumbing {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitConsistency = 2,
    kExitUsage = 64,
};

// Runs one CLI invocation. `args` excludes the program name; `in` backs
// "-i -". Reports go to `out`, diagnostics and usage text to `err`.
int cli_run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace plumbing
