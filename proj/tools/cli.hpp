#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semicong::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,               ///< success, identity holds
    kViolated = 1,         ///< identity violated or counterexample found
    kInvalidInput = 2,     ///< usage error or malformed input
    kHypothesis = 3,       ///< input outside an identity's hypotheses
};

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace semicong::cli
