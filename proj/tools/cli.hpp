#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace helmlayer::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kResonance = 2,
  kVerificationFailed = 3,
};

/// Runs one command line (args[0] is the program name). stdin/stdout are
/// the streams used when --input/--output are absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace helmlayer::cli
