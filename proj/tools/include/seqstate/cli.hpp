#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace seqstate::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailed = 1,
  kUsage = 2,
  kCapacity = 3,
  kNumeric = 4,
  kIo = 5,
};

/// Runs one command. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace seqstate::cli
