#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arfspin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `arfspin` tool. Subcommands: counts, verify,
/// cover-check, enumerate. Results go to `out` (or --output), diagnostics
/// to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with args excluding the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arfspin::cli
