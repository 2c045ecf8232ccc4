#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace freeop::cli {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;  // e.g. confluence check failed
constexpr int kExitUsage = 2;        // bad flags, unreadable or malformed input

/// Runs one `freeop` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freeop::cli
