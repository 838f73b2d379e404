#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antiflip {

/// Runs the command line `args` (without the program name). Returns the exit
/// status: 0 on success, 2 on bad input, 3 when an internal invariant fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antiflip
