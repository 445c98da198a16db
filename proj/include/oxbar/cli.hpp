#ifndef OXBAR_CLI_HPP
#define OXBAR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace oxbar::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidArguments = 1,
  kModelError = 2,
  kVerificationMismatch = 3,
};

/// Runs one command line. `args` excludes the program name. Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oxbar::cli

#endif  // OXBAR_CLI_HPP
