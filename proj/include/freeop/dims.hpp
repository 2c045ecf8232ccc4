#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freeop/bigint.hpp"
#include "freeop/multipoly.hpp"

namespace freeop {

/// Dimension sequence n -> dim O(n) of a binary operad with dim O(1) = 1.
class OperadDims {
 public:
  using Formula = std::function<BigInt(int)>;

  OperadDims(std::string name, Formula formula);

  /// Explicit values for arities 2, 3, ...; arities past the list fall back to
  /// `tail` when given and are an error otherwise.
  static OperadDims from_sequence(std::string name, std::vector<BigInt> from_arity2,
                                  std::optional<OperadDims> tail = std::nullopt);

  const std::string& name() const { return name_; }

  /// Throws std::out_of_range when n is beyond the known range, and
  /// std::invalid_argument for n < 1.
  BigInt dim(int n) const;

  /// Largest arity with a known value, or nullopt when unbounded.
  std::optional<int> max_arity() const { return max_arity_; }

 private:
  std::string name_;
  Formula formula_;
  std::optional<int> max_arity_;
};

/// Built-in ids: com-as, as, lie, com, anti-com, nov.
OperadDims builtin_operad(std::string_view name);
const std::vector<std::string>& builtin_operad_names();

/// d_n^bullet, d_n^circ and their sum for 2 <= n <= n_max (total(1) = 1).
struct DimTable {
  int n_max = 0;
  std::vector<BigInt> bullet;  // indexed by n; entries below 2 unused
  std::vector<BigInt> circ;

  BigInt total(int n) const;
};

DimTable free_product_dims(const OperadDims& left, const OperadDims& right, int n_max);

struct SymbolicDims {
  int n = 0;
  MultiPoly bullet;
  MultiPoly circ;

  MultiPoly total() const { return bullet + circ; }
};

/// The recursion over the polynomial semiring, for 2 <= n <= n_max <= 8.
std::vector<SymbolicDims> symbolic_dims(int n_max);

}  // namespace freeop
