#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfcm::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,        // unknown verb or flag, missing argument
  kInvalidInput = 2, // malformed or invalid structure, incompatible submonoid
  kResourceLimit = 3,
  kInconsistent = 4, // internal cross-check failed
  kIoError = 5,      // unreadable input or unwritable output
};

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfcm::cli
