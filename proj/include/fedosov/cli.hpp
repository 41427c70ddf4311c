#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fedosov {

/// Runs the command line `args` (args[0] is the program name).
/// Returns 0 on success, 1 when a verification fails, 2 on input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fedosov
