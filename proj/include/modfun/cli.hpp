#pragma once

#include <cstddef>
#include <iosfwd>

namespace modfun {

/// Exit codes of the command-line interface.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitGuard = 2,
  kExitInvariant = 3,
};

/// Hard and soft variable budgets for commands that build F_l(M).
inline constexpr std::size_t kHardGuardVars = 16;
inline constexpr std::size_t kSoftGuardVars = 12;

/// Runs one command. JSON goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modfun
