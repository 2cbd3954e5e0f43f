#ifndef DILABEL_TOOLS_CLI_HPP
#define DILABEL_TOOLS_CLI_HPP

#include <iosfwd>

namespace dilabel::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidLabeling = 1;
inline constexpr int kParseError = 2;
inline constexpr int kIntervalOnly = 3;
inline constexpr int kBudgetExceeded = 4;
inline constexpr int kNoMethod = 5;

/// Runs one command line (argv[0] is the program name) and returns the exit
/// code. Regular output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dilabel::cli

#endif  // DILABEL_TOOLS_CLI_HPP
