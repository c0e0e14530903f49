#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dte {

// Runs the command line `args` (without the program name). Exit codes: 0 ok,
// 1 a check failed, 2 usage error, 3 a mathematical precondition failed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dte
