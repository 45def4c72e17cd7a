#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pya::cli {

/// Exit codes of every subcommand.
enum ExitCode : int { kOk = 0, kParse = 1, kValidation = 2, kMismatch = 3 };

/// Runs the command line `args` (program name excluded). Structured output
/// goes to `out`, diagnostics to `err`. `out_is_tty` enables ANSI colors
/// unless PYA_COLOR=0; PYA_COLOR=1 forces them on.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool out_is_tty = false);

}  // namespace pya::cli
