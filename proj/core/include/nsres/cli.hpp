#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsres::cli {

// Runs the command line tool in-process; args excludes the program name.
// Returns the exit code: 0 on success, 1 on a domain error, 2 on a usage
// error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace nsres::cli
