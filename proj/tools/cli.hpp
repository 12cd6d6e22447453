#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ulrich::cli {

enum ExitCode : int { Ok = 0, BadInput = 1, Indeterminate = 2, CheckFailed = 3 };

/// args excludes the program name.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ulrich::cli
