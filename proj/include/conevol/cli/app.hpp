#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conevol::cli {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success, 1 domain error (out-of-range inputs), 2 numerical
/// failure, 64 malformed command line.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace conevol::cli
