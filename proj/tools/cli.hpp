#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace intcol::cli {

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,   ///< verdict false, infeasible or aborted
    kUsage = 2,      ///< bad arguments, unreadable or malformed input
    kInternal = 3,   ///< a theorem-backed check failed
};

/// Runs the tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace intcol::cli
