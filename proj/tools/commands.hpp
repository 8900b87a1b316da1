#pragma once

#include <ostream>

namespace seifertq::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2 };

// Parses argv, runs one subcommand and writes the report to out. Errors are
// reported on err as JSON.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace seifertq::cli
