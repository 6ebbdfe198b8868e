#pragma once

#include <iosfwd>
#include <stop_token>
#include <string>
#include <vector>

namespace wildnum::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;   // verify mismatch, search without exact match
inline constexpr int kExitExhausted = 2;  // trace ended without reaching an integer
inline constexpr int kExitUsage = 64;     // bad flags, unknown rule or reference
inline constexpr int kExitData = 65;      // malformed input b-file
inline constexpr int kExitIo = 74;        // output file cannot be written
inline constexpr int kExitInterrupted = 130;

// Environment variable that sets the default worker count.
inline constexpr const char* kWorkersEnv = "WILDNUM_WORKERS";

/// Runs the command line `args` (args[0] is the program name). Machine
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::stop_token stop = {});

}  // namespace wildnum::cli
