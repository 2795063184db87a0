#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgk::cli {

struct Options {
    bool color = false;
};

/// Runs `lgk` with the given arguments (without the program name).
/// Returns the process exit code: 0 success, 1 validation failure, 2 usage
/// or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Options& options = {});

}  // namespace lgk::cli
