#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed or
// a precondition refused the request, 2 usage error.

#include <ostream>
#include <string>
#include <vector>

namespace dlcoh {

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlcoh
