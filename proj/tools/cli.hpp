#ifndef CONTRACTIONS_TOOLS_CLI_HPP_
#define CONTRACTIONS_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace contractions::cli {

// Exit-code contract, stable across subcommands: 0 success, 1 verification
// failure or guard violation, 2 argument error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on the given arguments (program name excluded). All output
/// goes to the supplied streams so tests can drive the interface directly.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace contractions::cli

#endif  // CONTRACTIONS_TOOLS_CLI_HPP_
