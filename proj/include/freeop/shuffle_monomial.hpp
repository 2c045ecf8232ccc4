#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace freeop {

/// Malformed monomial/element/rule text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A tree whose children blocks do not have increasing minima.
class ShuffleConditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Generator {
  std::string name;
  int arity = 2;
};

/// Generator symbols in decreasing precedence: the first is the largest in
/// the monomial order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> generators);
  /// Binary generators named by a comma-separated list, e.g. "x,y".
  static Alphabet binary(std::string_view names);

  const std::vector<Generator>& generators() const { return generators_; }
  bool contains(std::string_view name) const;
  /// 0 for the largest symbol. Throws std::invalid_argument for unknown names.
  int rank(std::string_view name) const;
  int arity(std::string_view name) const;
  bool all_binary() const;
  std::string to_string() const;

 private:
  std::vector<Generator> generators_;
};

/// A shuffle tree: internal vertices labelled by generator symbols, leaves by
/// distinct positive integers, and at every vertex the children ordered by
/// strictly increasing smallest leaf.
class ShuffleMonomial {
 public:
  static ShuffleMonomial leaf(int label);
  /// Throws ShuffleConditionError if child minima are not increasing.
  static ShuffleMonomial op(std::string symbol, std::vector<ShuffleMonomial> children);

  /// Grammar: `sym '(' arg+ ')'` with space-separated args, leaves are
  /// integers. Leaves must be exactly 1..n. Throws ParseError on syntax errors
  /// and ShuffleConditionError on a violated shuffle condition.
  static ShuffleMonomial parse(std::string_view text);
  std::string to_string() const;

  bool is_leaf() const { return children_.empty(); }
  const std::string& symbol() const { return symbol_; }
  int label() const { return label_; }
  const std::vector<ShuffleMonomial>& children() const { return children_; }
  int arity() const { return arity_; }
  int min_leaf() const { return min_leaf_; }
  int vertex_count() const { return vertices_; }

  /// Leaf labels left to right.
  std::vector<int> leaf_sequence() const;
  /// Subtree reached by following child indices from the root.
  const ShuffleMonomial& at(std::span<const int> path) const;

  /// Structural order (not the monomial order); used for containers.
  friend std::strong_ordering operator<=>(const ShuffleMonomial& a, const ShuffleMonomial& b);
  friend bool operator==(const ShuffleMonomial& a, const ShuffleMonomial& b) { return (a <=> b) == 0; }

 private:
  ShuffleMonomial() = default;

  std::string symbol_;
  int label_ = 0;
  int arity_ = 1;
  int min_leaf_ = 0;
  int vertices_ = 0;
  std::vector<ShuffleMonomial> children_;
};

/// Graded path-lexicographic order.
///
/// Compare arity; then for each leaf i = 1..n the word of generator symbols on
/// the path from the root to leaf i, words compared by length first (longer is
/// larger) and then symbol by symbol using the alphabet precedence; then the
/// leaf sequences read left to right, lexicographically.
class MonomialOrder {
 public:
  explicit MonomialOrder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const { return alphabet_; }

  /// Throws std::invalid_argument when the arities differ.
  std::strong_ordering compare(const ShuffleMonomial& a, const ShuffleMonomial& b) const;
  bool less(const ShuffleMonomial& a, const ShuffleMonomial& b) const { return compare(a, b) < 0; }

 private:
  std::vector<std::vector<int>> path_words(const ShuffleMonomial& m) const;
  Alphabet alphabet_;
};

/// Every shuffle monomial over `alphabet` with leaves 1..n, in a fixed
/// recursive order. Binary alphabets only.
std::vector<ShuffleMonomial> enumerate_shuffle_trees(const Alphabet& alphabet, int n);

}  // namespace freeop
