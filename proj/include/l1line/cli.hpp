#pragma once

#include <iosfwd>

namespace l1line::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Entry point behind the l1line executable. Subcommands: fit, path, sweep,
/// gen, verify, bench. Returns 0 on success, 1 on usage or input errors, 2
/// when verification fails.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace l1line::cli
