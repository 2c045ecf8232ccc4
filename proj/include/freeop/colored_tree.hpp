#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace freeop {

class OperadDims;

enum class Color { bullet, circ };

inline Color opposite(Color c) { return c == Color::bullet ? Color::circ : Color::bullet; }
std::string_view color_name(Color c);

/// A decorated two-coloured tree: a basis element of the free product.
///
/// Internal vertices carry a colour, an ordered child list and a decoration
/// index into a basis of O_1(m) (bullet) or O_2(m) (circ). Leaves carry labels.
/// A bare leaf is the identity in arity 1.
class ColoredTree {
 public:
  static ColoredTree leaf(int label);
  /// Builds a vertex with the children in the given order. No validation;
  /// see `basis_violation`.
  static ColoredTree vertex(Color color, int decoration, std::vector<ColoredTree> children);

  bool is_leaf() const { return children_.empty(); }
  int label() const { return label_; }
  Color color() const { return color_; }
  int decoration() const { return decoration_; }
  const std::vector<ColoredTree>& children() const { return children_; }

  int arity() const { return arity_; }
  int min_leaf() const { return min_leaf_; }

  /// Leaf labels left to right.
  std::vector<int> leaves() const;

  /// `bullet[dec=K](child, ...)`, `circ[dec=K](...)`, leaves as integers.
  std::string to_string() const;
  /// Inverse of to_string. Throws std::invalid_argument with the offset.
  static ColoredTree parse(std::string_view text);

  /// Same shape and decorations with labels mapped through `relabel[label]`.
  ColoredTree relabeled(const std::vector<int>& relabel) const;

  friend bool operator==(const ColoredTree& a, const ColoredTree& b);
  friend std::strong_ordering operator<=>(const ColoredTree& a, const ColoredTree& b);

 private:
  ColoredTree() = default;
  void refresh();

  Color color_ = Color::bullet;
  int decoration_ = 0;
  int label_ = 0;
  int arity_ = 1;
  int min_leaf_ = 0;
  std::vector<ColoredTree> children_;
};

/// Describes why `t` is not a canonical basis tree, or nullopt if it is one.
/// Checks: arity >= 2 at every vertex, no same-colour edge, children ordered
/// by smallest leaf label, leaves are exactly 1..n, and (when dimension
/// sequences are given) decoration in [0, dim O(m)).
std::optional<std::string> basis_violation(const ColoredTree& t, const OperadDims* left = nullptr,
                                           const OperadDims* right = nullptr);

/// Two-coloured alternating tree with unlabeled leaves and unordered children,
/// stored in canonical form (children sorted ascending).
class UnlabeledTree {
 public:
  static UnlabeledTree leaf();
  /// Sorts the children into canonical order.
  static UnlabeledTree vertex(Color color, std::vector<UnlabeledTree> children);

  bool is_leaf() const { return children_.empty(); }
  Color color() const { return color_; }
  const std::vector<UnlabeledTree>& children() const { return children_; }
  int size() const { return size_; }

  /// `*` for a leaf, `bullet(...)` / `circ(...)` otherwise.
  std::string to_string() const;

  /// Structural order: size, then leaf before vertex, then colour, then
  /// children lexicographically.
  friend std::strong_ordering operator<=>(const UnlabeledTree& a, const UnlabeledTree& b);
  friend bool operator==(const UnlabeledTree& a, const UnlabeledTree& b) { return (a <=> b) == 0; }

 private:
  UnlabeledTree() = default;
  Color color_ = Color::bullet;
  int size_ = 1;
  std::vector<UnlabeledTree> children_;
};

/// Forgets labels and decorations.
UnlabeledTree forget_labels(const ColoredTree& t);

}  // namespace freeop
