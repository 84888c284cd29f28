#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eistrace {

// Runs the command-line tool on the given arguments (program name excluded),
// writing results to out and diagnostics to err.  Returns the process exit
// code: 0 success, 1 verification failure, 2 usage or input error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eistrace
