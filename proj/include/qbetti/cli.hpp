#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbetti {

// Parsed command-line state; flags are validated before any computation
// starts and unknown flags are rejected by the parser.
struct CliConfig {
    std::string subcommand;
    int maxDegree = 64;
    std::string format = "plain";
};

// Full front end: parses args (program name excluded), dispatches, writes
// to the given streams, and returns the process exit code: 0 success,
// 1 invariant violation or failed check, 2 obstruction, 64 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbetti
