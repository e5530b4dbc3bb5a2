#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "signalgame/error.hpp"

namespace signalgame::cli {

/// Exit codes: 0 success, 2 input error, 3 regime/contract error, 4 runtime
/// failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitRegime = 3;
inline constexpr int kExitRuntime = 4;

int exit_code_for(ErrorKind kind);

/// Runs one command line. `args` excludes the program name. Results go to
/// `out` unless redirected with --out; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signalgame::cli
