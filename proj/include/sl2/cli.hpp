#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sl2 {

enum ExitCode { kExitOk = 0, kExitParse = 1, kExitPrecondition = 2, kExitInternal = 3 };

/// Runs one invocation; `args` excludes the program name. With --batch each
/// line of `in` is a further argument list, run with the outer global flags.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sl2
