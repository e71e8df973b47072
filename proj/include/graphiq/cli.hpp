#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphiq {

// Runs the command line given argv-style arguments (program name excluded).
// Returns the process exit code: 0 success, 2 usage error, 1 runtime error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphiq
