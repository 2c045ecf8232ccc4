#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freeop/bigint.hpp"
#include "freeop/colored_tree.hpp"
#include "freeop/dims.hpp"
#include "freeop/spnet.hpp"

namespace freeop {

enum class RootFilter { any, bullet, circ };

/// Calls `visit` once for every canonical basis tree of T(O_1, O_2)(n).
///
/// Children of each vertex are ordered by smallest leaf label; leaf label sets
/// are assigned by walking the set partitions of {1..n} in restricted-growth
/// order, bullet-rooted trees before circ-rooted ones. For n = 1 the only tree
/// is the leaf `1`.
void for_each_basis_tree(const OperadDims& left, const OperadDims& right, int n, RootFilter root,
                         const std::function<void(const ColoredTree&)>& visit);

std::vector<ColoredTree> enumerate_basis(const OperadDims& left, const OperadDims& right, int n,
                                         RootFilter root = RootFilter::any);

/// A vertex predicate: colour `target`, and when `composite_child` is set, at
/// least one child that is a vertex (optionally of colour `child_color`).
struct VertexPattern {
  Color target = Color::bullet;
  bool composite_child = false;
  std::optional<Color> child_color;

  bool matches(const ColoredTree& vertex) const;

  /// Named patterns: `bullet`, `circ`, `bullet-composite-child`,
  /// `circ-composite-child`. Throws std::invalid_argument otherwise.
  static VertexPattern named(std::string_view name);
};

bool contains_pattern(const ColoredTree& t, std::span<const VertexPattern> patterns);

/// Basis trees of arity n with no vertex matching any of `patterns`.
BigInt count_avoiding(const OperadDims& left, const OperadDims& right, int n,
                      std::span<const VertexPattern> patterns);

/// Unlabeled basis trees of (Com-As * Com-As)(n): two-coloured alternating
/// trees with unordered children, in ascending structural order.
std::vector<UnlabeledTree> enumerate_unlabeled(int n, RootFilter root = RootFilter::any);

/// Forgets decorations and labels, then maps bullet to parallel and circ to series.
SPNetwork classify_by_network(const ColoredTree& t);

// ---- As * As: decorations are planar orders ----
//
// A vertex of arity m with canonical children c_0 < ... < c_{m-1} and
// decoration k draws its children in the planar order c_p(0), ..., c_p(m-1),
// where p is the k-th permutation of {0..m-1} in lexicographic order.

/// Rank of a permutation of {0..m-1} in lexicographic order.
int permutation_rank(std::span<const int> perm);
std::vector<int> permutation_unrank(int rank, int m);

/// Same tree with each vertex's children listed in planar order (decorations zeroed).
ColoredTree as_as_to_planar(const ColoredTree& canonical);
/// Inverse of as_as_to_planar: `planar` lists children in drawing order.
ColoredTree as_as_from_planar(const ColoredTree& planar);

/// Operadic composition in As * As: grafts args[i] onto leaf i+1 of t, with
/// args[i]'s labels shifted by the arities of args[0..i-1], then contracts
/// every edge joining two vertices of the same colour. Throws
/// std::invalid_argument on arity mismatch or non-basis input.
ColoredTree graft(const ColoredTree& t, std::span<const ColoredTree> args);

}  // namespace freeop
