#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tibcal {

// Exit codes of the command line tool.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tibcal
