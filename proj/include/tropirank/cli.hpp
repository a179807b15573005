#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropirank::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kPreconditionViolated = 3,
};

/// Runs the command line `tropirank <args...>`. Input file "-" reads from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace tropirank::cli
