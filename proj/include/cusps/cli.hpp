#pragma once
// Command-line front end.  run_cli takes the argument vector without the
// program name and returns the process exit code: 0 on success, 1 on a
// domain error, 2 on a usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace cusps {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cusps
