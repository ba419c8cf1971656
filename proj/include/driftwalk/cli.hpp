#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace driftwalk::cli {

enum ExitCode : int {
    kOk = 0,
    kValidation = 1,
    kBudget = 2,
    kInternal = 3,
};

/// Runs one command line (program name excluded). Records go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace driftwalk::cli
