#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfkit {

/// Runs one hopfkit command. `args` excludes the program name. Returns 0 on
/// pass, 1 on verification failure, 2 on usage or I/O errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfkit
