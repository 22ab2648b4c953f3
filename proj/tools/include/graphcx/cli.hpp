#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphcx::cli {

/// Runs one command line (without the program name).  Exit status: 0 on
/// success, 1 when a violation was found, 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphcx::cli
