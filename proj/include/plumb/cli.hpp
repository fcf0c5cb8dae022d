#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plumb {

// Entry point of the plumb-bounds tool; `args` excludes the program name.
// Returns 0 on success, 1 on input errors, 2 on invariant violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plumb
