#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adlab::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs one subcommand. args excludes the program name. Help text goes to
/// out, usage errors and the pass/fail summary to diag.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& diag);

}  // namespace adlab::cli
