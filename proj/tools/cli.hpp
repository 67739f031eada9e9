#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordlim::cli {

/// Runs one subcommand. `args` excludes the program name. Returns the exit
/// status: 0 on success, 2 for usage or validation errors, 1 for internal
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordlim::cli
