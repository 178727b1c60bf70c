#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace episturm::cli {

/// Runs one command. `args` excludes the program name. Returns the exit
/// code: 0 success, 1 domain failure or empty result, 2 malformed input,
/// 3 internal error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace episturm::cli
