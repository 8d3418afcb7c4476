#pragma once

#include <iosfwd>

namespace dmst {

/// Exit statuses of the dmst command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIoError = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitUsage = 64;

/// Entry point of the dmst tool (solve, bench, gen). Normal output goes to
/// `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dmst
