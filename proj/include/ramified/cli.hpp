#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramified::cli {

enum ExitCode : int { kOk = 0, kNumericFailure = 1, kInvalidFlags = 2 };

/// Runs one command line (argv[0] is the program name). Data goes to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramified::cli
