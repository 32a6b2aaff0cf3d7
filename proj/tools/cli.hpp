#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gmanvol::cli {

/// Runs `gmanvol <verb> <file>... [flags]`; `args` excludes the program
/// name. Results go to `out`, error objects to `err`. Returns the exit
/// status: 0 success, 1 validation failure, 2 unsupported input or usage,
/// 3 unreadable or malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmanvol::cli
