#pragma once

// The `fondp` command line: solve, verify, translate, gen, emit-asp.

#include <iosfwd>
#include <string>
#include <vector>

namespace fondplus::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,         // solved, or verified as a solution
  kNegative = 10,       // proven unsolvable, or not a solution
  kResourceLimit = 20,  // budget or size cap hit
  kInputError = 30,     // unreadable or malformed input, bad flags
};

/// Runs one command line (args[0] is the program name). Human-oriented text
/// goes to `out` and diagnostics to `err`; the last line written to `out`
/// is always `STATUS: <WORD>`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fondplus::cli
