#ifndef PARGROUPOID_CLI_HPP
#define PARGROUPOID_CLI_HPP

#include <ostream>

namespace pargroupoid::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;

/// Runs the command line. Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pargroupoid::cli

#endif
