#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "freeop/bigint.hpp"
#include "freeop/colored_tree.hpp"

namespace freeop {

/// Series-parallel network with unlabeled edges, as a canonical term.
///
/// A series node never has a series child and a parallel node never has a
/// parallel child; children are kept sorted so that structural equality is
/// network equality.
class SPNetwork {
 public:
  enum class Kind { edge, parallel, series };

  static SPNetwork edge();
  /// Series / parallel composition of >= 2 networks. Children of the same
  /// kind are flattened into the new node.
  static SPNetwork series(std::vector<SPNetwork> parts);
  static SPNetwork parallel(std::vector<SPNetwork> parts);

  Kind kind() const { return kind_; }
  const std::vector<SPNetwork>& children() const { return children_; }
  int edges() const { return edges_; }

  /// `e`, `S(...)`, `P(...)` with space-separated children, e.g. `P(e e S(e e))`.
  std::string to_string() const;
  /// Accepts only canonical text; throws std::invalid_argument otherwise.
  static SPNetwork parse(std::string_view text);

  /// Structural order: edge count, then kind, then children lexicographically.
  friend std::strong_ordering operator<=>(const SPNetwork& a, const SPNetwork& b);
  friend bool operator==(const SPNetwork& a, const SPNetwork& b) { return (a <=> b) == 0; }

 private:
  static SPNetwork compose(Kind kind, std::vector<SPNetwork> parts);

  Kind kind_ = Kind::edge;
  int edges_ = 1;
  std::vector<SPNetwork> children_;
};

/// All networks with n edges (1 <= n <= 12), ascending structural order.
/// Built by closing single edges under series and parallel composition.
std::vector<SPNetwork> enumerate_networks(int n);

/// Number of networks with n unlabeled edges, from the multiset-composition
/// recurrence (no enumeration).
BigInt macmahon(int n);

/// bullet <-> parallel, circ <-> series, leaf <-> edge.
SPNetwork tree_to_network(const UnlabeledTree& t);
UnlabeledTree network_to_tree(const SPNetwork& net);

}  // namespace freeop
