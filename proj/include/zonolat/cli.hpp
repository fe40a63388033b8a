#ifndef ZONOLAT_CLI_HPP
#define ZONOLAT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace zonolat {

enum ExitCode : int {
  exit_ok = 0,
  exit_domain_error = 1,
  exit_resource_error = 2,
  exit_invariant_violation = 3,
};

/// Runs one zonolat command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zonolat

#endif  // ZONOLAT_CLI_HPP
