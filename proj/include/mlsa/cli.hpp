#pragma once

#include <iosfwd>

#include "mlsa/error.hpp"

namespace mlsa {

// Process exit codes of the mlsa tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // infeasible, invalid instance, failed check
inline constexpr int kExitIo = 2;
inline constexpr int kExitParse = 3;  // malformed files and bad command lines
inline constexpr int kExitBudget = 4;

int exit_code(ErrorKind kind);

// Entry point of the mlsa tool with injectable streams. argv[0] is the
// program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mlsa
