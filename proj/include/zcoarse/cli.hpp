#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zcoarse::cli {

enum ExitCode : int { ok = 0, failure = 1, undecided = 2 };

/// Runs one command. args[0] is the program name. Reports go to `out` (or the --out
/// file), diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zcoarse::cli
