#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgt {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // semantic: invalid object, unmet theorem
inline constexpr int kExitUsage = 2;    // usage or parse error

// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgt
