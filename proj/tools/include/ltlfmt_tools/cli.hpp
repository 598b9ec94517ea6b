#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ltlfmt::tools {

enum ExitCode { ExitSat = 0, ExitUnsat = 1, ExitUnknown = 2, ExitUsage = 3, ExitBackend = 4 };

/// Runs the command line tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ltlfmt::tools
