#pragma once

#include <map>
#include <string>
#include <string_view>

#include "freeop/bigint.hpp"
#include "freeop/shuffle_monomial.hpp"

namespace freeop {

/// Rational linear combination of shuffle monomials of one arity. Zero
/// coefficients are never stored.
class ShuffleElement {
 public:
  using Terms = std::map<ShuffleMonomial, BigRational>;

  ShuffleElement() = default;
  explicit ShuffleElement(const ShuffleMonomial& m, const BigRational& c = 1);

  /// Terms like `x(x(1 2) 3) - 2*x(1 x(2 3)) + 1/2 x(x(1 3) 2)`; `0` is the
  /// zero element. Throws ParseError / ShuffleConditionError.
  static ShuffleElement parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// 0 for the zero element.
  int arity() const { return terms_.empty() ? 0 : terms_.begin()->first.arity(); }
  BigRational coefficient(const ShuffleMonomial& m) const;

  /// Throws std::invalid_argument when m has a different arity.
  void add_term(const ShuffleMonomial& m, const BigRational& c);

  ShuffleElement& operator+=(const ShuffleElement& other);
  ShuffleElement& operator-=(const ShuffleElement& other);
  ShuffleElement operator+(const ShuffleElement& other) const;
  ShuffleElement operator-(const ShuffleElement& other) const;
  ShuffleElement operator*(const BigRational& scalar) const;

  /// Terms listed from the largest monomial down under `order`.
  std::string to_string(const MonomialOrder& order) const;

  friend bool operator==(const ShuffleElement&, const ShuffleElement&) = default;

 private:
  Terms terms_;
};

std::string rational_to_string(const BigRational& q);

}  // namespace freeop
