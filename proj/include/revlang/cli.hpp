#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace revlang {

/// Runs the command line `args` (program name excluded). Exit codes: 0 on
/// success, whatever the verdict; 2 on usage, parse or alphabet errors; 3
/// when a cap is exceeded or a search aborts.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revlang
