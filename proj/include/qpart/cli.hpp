#ifndef QPART_CLI_HPP
#define QPART_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qpart {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitEvaluation = 2;
inline constexpr int kExitVerification = 3;

/// Runs the qpart command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpart

#endif  // QPART_CLI_HPP
