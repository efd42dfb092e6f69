#ifndef BALGAMMA_COMMANDS_HPP
#define BALGAMMA_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace balgamma {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitParseError = 2,
  kExitBudgetExceeded = 3,
};

/// Runs the command-line tool on `args` (args[0] is the program name).
/// Input named "-" is read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace balgamma

#endif  // BALGAMMA_COMMANDS_HPP
