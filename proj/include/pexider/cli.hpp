#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pexider::cli {

/// Process exit codes.
enum ExitCode : int {
    ok = 0,
    fails = 1,          // check: equation violated; classify: not a solution; corpus: mismatches
    usage_error = 2,    // parse or validation error
    not_closed = 3,     // classify: zero set not closed in D
    internal_error = 4  // exact and oracle verdicts disagree, or the classifier found no case
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pexider::cli
