#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace awrpsim::cli {

enum ExitCode : int {
    kOk = 0,
    kUsageError = 1,
    kDataError = 2,
    kInternalError = 3,
};

/// Runs the command line `args` (without the program name). Artifacts go to
/// `out` unless --out is given; diagnostics go to `err`.
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace awrpsim::cli
