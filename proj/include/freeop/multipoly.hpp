#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freeop/bigint.hpp"

namespace freeop {

/// Indeterminate x_i (left operad) or y_i (right operad).
struct Var {
  enum class Kind : char { x = 'x', y = 'y' };
  Kind kind;
  int index;

  // Variable order: x before y, then by index (x2, x3, ..., y2, y3, ...).
  friend std::strong_ordering operator<=>(const Var& a, const Var& b) {
    if (a.kind != b.kind) return a.kind == Kind::x ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.index <=> b.index;
  }
  friend bool operator==(const Var&, const Var&) = default;

  std::string to_string() const { return std::string(1, static_cast<char>(kind)) + std::to_string(index); }
};

/// Commutative monomial: (variable, exponent) pairs sorted by variable order.
class PolyMonomial {
 public:
  PolyMonomial() = default;
  static PolyMonomial variable(Var v) {
    PolyMonomial m;
    m.factors_.emplace_back(v, 1);
    return m;
  }

  const std::vector<std::pair<Var, int>>& factors() const { return factors_; }
  int degree() const;
  int exponent(Var v) const;
  PolyMonomial operator*(const PolyMonomial& other) const;
  PolyMonomial swapped() const;
  std::string to_string() const;

  friend bool operator==(const PolyMonomial&, const PolyMonomial&) = default;

 private:
  std::vector<std::pair<Var, int>> factors_;
};

/// Display order: lower total degree first; within a degree, the monomial with
/// the larger exponent on the first differing variable (x_2, x_3, ..., y_2, ...) first.
struct PolyMonomialOrder {
  bool operator()(const PolyMonomial& a, const PolyMonomial& b) const;
};

/// Polynomial with BigInt coefficients in commuting indeterminates x_i, y_i.
/// Zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<PolyMonomial, BigInt, PolyMonomialOrder>;

  MultiPoly() = default;
  MultiPoly(long long constant);  // NOLINT: implicit for semiring use
  MultiPoly(const BigInt& constant);  // NOLINT
  static MultiPoly variable(Var v);
  /// Parses `x3 + 3*x2*y2^2 + ...` (non-negative integer coefficients and
  /// signs). Throws std::invalid_argument on malformed input.
  static MultiPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const PolyMonomial& m) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator*(const BigInt& scalar) const;

  /// Interchanges every x_i with y_i.
  MultiPoly swapped() const;
  BigInt evaluate(const std::function<BigInt(Var)>& value) const;

  /// Canonical text, e.g. `x3 + 3*x2*y2`.
  std::string to_string() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void add_term(const PolyMonomial& m, const BigInt& c);
  Terms terms_;
};

}  // namespace freeop
