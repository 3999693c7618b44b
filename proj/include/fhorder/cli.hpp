#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fhorder {

/// Exit codes of the command-line tool.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int negative = 1;  ///< boolean query answered "false"
inline constexpr int none = 2;      ///< no witness / not a gap
inline constexpr int usage = 64;    ///< parse or argument error
inline constexpr int cost_guard = 65;
inline constexpr int internal = 70;
}  // namespace exit_code

/// Runs the tool on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fhorder
