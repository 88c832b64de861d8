#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tnorder {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitSizeBound = 3;
inline constexpr int kExitTimeout = 4;

// Subcommands: gen, order, cost, bench. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tnorder
