#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tripext::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,
  kInvalidInput = 2,
  kInconclusive = 3,
  kInternal = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tripext::cli
