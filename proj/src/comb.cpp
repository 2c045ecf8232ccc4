#include "freeop/comb.hpp"

#include <stdexcept>

namespace freeop {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix, int min_parts,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    if (static_cast<int>(prefix.size()) >= min_parts) out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    emit_partitions(remaining - part, part, prefix, min_parts, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n, int min_parts) {
  if (min_parts < 1) throw std::invalid_argument("min_parts must be >= 1");
  std::vector<Partition> out;
  if (n <= 0) return out;
  std::vector<int> prefix;
  emit_partitions(n, n, prefix, min_parts, out);
  return out;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt double_factorial(int n) {
  BigInt r = 1;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

BigInt stabilizer_order(const Partition& p) {
  BigInt r = 1;
  const auto& parts = p.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    r *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

BigInt orbit_count(const Partition& p) {
  BigInt denominator = stabilizer_order(p);
  for (int part : p.parts()) denominator *= factorial(part);
  const BigInt numerator = factorial(p.n());
  if (numerator % denominator != 0)
    throw std::logic_error("orbit_count: inexact division for " + p.to_string());
  return numerator / denominator;
}

}  // namespace freeop
