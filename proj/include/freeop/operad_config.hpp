#pragma once

#include <map>
#include <string>
#include <string_view>

#include "freeop/dims.hpp"

namespace freeop {

/// Named operad dimension sequences read from a config file.
///
/// Line format (UTF-8, `#` starts a comment):
///   name = [d2, d3, d4, ...]
///   name = builtin:<id>
///   name = [d2, d3] ++ builtin:<id>     # explicit prefix, builtin tail
class OperadConfig {
 public:
  /// Throws std::invalid_argument with a line number on malformed input.
  static OperadConfig parse(std::string_view text);
  static OperadConfig load(const std::string& path);

  /// Config entries shadow builtins; throws std::invalid_argument if neither knows `name`.
  OperadDims resolve(std::string_view name) const;

  const std::map<std::string, OperadDims, std::less<>>& entries() const { return entries_; }

 private:
  std::map<std::string, OperadDims, std::less<>> entries_;
};

}  // namespace freeop
