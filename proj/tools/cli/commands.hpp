#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypercox::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,       ///< unexpected internal error
    kBadInput = 2,      ///< validation, parse or schema error
    kInconclusive = 3,  ///< a cap stopped the computation
    kIterationLimit = 4,
};

/// Entry point of the hypercox command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypercox::cli
