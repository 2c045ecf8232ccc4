#include "freeop/operad_config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace freeop {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::invalid_argument("operad config line " + std::to_string(line) + ": " + what);
}

std::vector<BigInt> parse_list(const std::string& text, int line) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') fail(line, "expected [d2, d3, ...]");
  std::vector<BigInt> values;
  std::stringstream items(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(items, item, ',')) {
    item = trim(item);
    if (item.empty()) fail(line, "empty list entry");
    for (char c : item)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(line, "dimension '" + item + "' is not a non-negative integer");
    values.emplace_back(item);
  }
  if (values.empty()) fail(line, "empty dimension list");
  return values;
}

OperadDims parse_builtin(const std::string& text, int line) {
  constexpr std::string_view prefix = "builtin:";
  if (text.rfind(prefix, 0) != 0) fail(line, "expected builtin:<id>");
  try {
    return builtin_operad(trim(std::string_view(text).substr(prefix.size())));
  } catch (const std::invalid_argument& e) {
    fail(line, e.what());
  }
}

}  // namespace

OperadConfig OperadConfig::parse(std::string_view text) {
  OperadConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string content = trim(raw);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) fail(line, "expected 'name = value'");
    const std::string name = trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    if (name.empty()) fail(line, "missing operad name");
    if (cfg.entries_.contains(name)) fail(line, "duplicate operad '" + name + "'");

    std::optional<OperadDims> dims;
    if (auto plus = value.find("++"); plus != std::string::npos) {
      auto values = parse_list(trim(std::string_view(value).substr(0, plus)), line);
      auto tail = parse_builtin(trim(std::string_view(value).substr(plus + 2)), line);
      dims = OperadDims::from_sequence(name, std::move(values), std::move(tail));
    } else if (!value.empty() && value.front() == '[') {
      dims = OperadDims::from_sequence(name, parse_list(value, line));
    } else {
      auto b = parse_builtin(value, line);
      dims = OperadDims(name, [b](int n) { return b.dim(n); });
    }
    cfg.entries_.emplace(name, std::move(*dims));
  }
  return cfg;
}

OperadConfig OperadConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open operad config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

OperadDims OperadConfig::resolve(std::string_view name) const {
  if (auto it = entries_.find(name); it != entries_.end()) return it->second;
  return builtin_operad(name);
}

}  // namespace freeop
