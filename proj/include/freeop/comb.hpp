#pragma once

#include <span>
#include <string>
#include <vector>

#include "freeop/bigint.hpp"

namespace freeop {

/// An integer partition stored as weakly decreasing positive parts.
class Partition {
 public:
  /// Throws std::invalid_argument unless `parts` is non-empty, weakly
  /// decreasing and strictly positive.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(parts_.size()); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n with at least `min_parts` parts, in decreasing
/// lexicographic order: (4,1), (3,2), (3,1,1), ...
std::vector<Partition> partitions(int n, int min_parts);

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt double_factorial(int n);

/// |S(m, lambda)|: product of (multiplicity of each part value)!.
BigInt stabilizer_order(const Partition& p);

/// n! / (n_1! ... n_m! |S(m, lambda)|), the number of set partitions of an
/// n-set whose block sizes are the parts of p.
BigInt orbit_count(const Partition& p);

}  // namespace freeop
