#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regsem {

/// Entry point of the command-line tool, separated from main() so tests
/// can drive it. args excludes the program name.
///
/// Exit codes: 0 success, 1 verification failure (a counterexample was
/// found), 2 input or usage error, 3 a cap or budget was exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace regsem
