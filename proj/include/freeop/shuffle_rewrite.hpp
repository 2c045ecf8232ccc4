#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freeop/bigint.hpp"
#include "freeop/shuffle_element.hpp"
#include "freeop/shuffle_monomial.hpp"

namespace freeop {

using VertexPath = std::vector<int>;  // child indices from the root

/// An occurrence of a pattern monomial inside a larger monomial.
struct Embedding {
  VertexPath root;                   // image of the pattern root
  std::vector<VertexPath> vertices;  // images of the pattern's vertices, pattern preorder
  std::vector<VertexPath> inputs;    // inputs[j]: subtree plugged into pattern leaf j+1

  bool shares_vertex_with(const Embedding& other) const;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Every occurrence of `pattern` in `m`: the pattern's vertices match a
/// connected set of vertices of `m` with equal symbols and child positions,
/// and the subtrees hanging below are ranked by smallest leaf exactly as the
/// pattern's leaf labels. Ordered leftmost-outermost (preorder of the image root).
std::vector<Embedding> find_embeddings(const ShuffleMonomial& m, const ShuffleMonomial& pattern);
std::optional<Embedding> find_divisor(const ShuffleMonomial& m, const ShuffleMonomial& pattern);

/// Replaces the occurrence `e` in `m` by `replacement` (same arity as the
/// pattern), plugging the hanging subtrees into the replacement's leaves.
ShuffleMonomial substitute(const ShuffleMonomial& m, const Embedding& e, const ShuffleMonomial& replacement);

/// lhs -> rhs with every monomial of rhs smaller than lhs.
struct RewriteRule {
  ShuffleMonomial lhs;
  ShuffleElement rhs;

  /// `lhs -> rhs` text.
  std::string to_string(const MonomialOrder& order) const;
};

/// Orients `relation = 0` by its leading monomial: lm -> lm - relation / lc.
/// Throws std::invalid_argument for the zero relation.
RewriteRule orient(const ShuffleElement& relation, const MonomialOrder& order);

/// Rules plus the alphabet and order they were oriented with.
struct RewriteSystem {
  MonomialOrder order;
  std::vector<RewriteRule> rules;

  /// One equation `LHS = RHS` per line, `#` comments. Without an explicit
  /// alphabet the generators are the symbols used, sorted by name (so x > y);
  /// each must be used with one arity and, for now, be binary. Throws
  /// ParseError (with line number in the message) or std::invalid_argument.
  static RewriteSystem parse(std::string_view text, std::optional<Alphabet> alphabet = std::nullopt);
  static RewriteSystem load(const std::string& path, std::optional<Alphabet> alphabet = std::nullopt);
};

/// `m` minus its occurrence at `e`, replaced by the rule's right-hand side.
ShuffleElement rewrite_at(const ShuffleMonomial& m, const Embedding& e, const RewriteRule& rule);

/// The leftmost-outermost divisor of `m` among `rules` (first rule wins at a vertex).
struct Divisor {
  std::size_t rule;
  Embedding embedding;
};
std::optional<Divisor> first_divisor(const ShuffleMonomial& m, std::span<const RewriteRule> rules);
std::vector<Divisor> all_divisors(const ShuffleMonomial& m, std::span<const RewriteRule> rules);

bool is_normal(const ShuffleMonomial& m, std::span<const RewriteRule> rules);

/// Fully reduces `e`: always rewrites the largest reducible monomial at its
/// leftmost-outermost divisor. Every step is checked to strictly lower the
/// rewritten monomial; a violation throws std::logic_error.
ShuffleElement normal_form(const ShuffleElement& e, std::span<const RewriteRule> rules, const MonomialOrder& order);

/// Same, but picks a random reducible monomial and a random divisor each step.
ShuffleElement normal_form_randomized(const ShuffleElement& e, std::span<const RewriteRule> rules,
                                      const MonomialOrder& order, std::mt19937_64& rng);

/// A minimal common multiple of two leading monomials and its S-element.
struct Overlap {
  ShuffleMonomial monomial;
  Embedding first;
  Embedding second;
  ShuffleElement s_element;  // one-step reduction via `first` minus via `second`
};

/// Monomials of arity <= max_arity covered exactly by an occurrence of r1.lhs
/// and an occurrence of r2.lhs that share at least one vertex. When r1 and r2
/// are the same rule the identical occurrence is skipped and each unordered
/// pair of occurrences is reported once. Sorted by arity, then largest
/// monomial first, then by occurrence roots.
std::vector<Overlap> overlaps(const RewriteRule& r1, const RewriteRule& r2, const MonomialOrder& order,
                              int max_arity, bool same_rule = false);

struct ConfluenceEntry {
  std::size_t rule_a;
  std::size_t rule_b;
  Overlap overlap;
  ShuffleElement reduced;  // normal form of the S-element
};

struct ConfluenceReport {
  bool pass = true;
  std::vector<ConfluenceEntry> entries;  // every overlap checked, deterministic order

  std::vector<const ConfluenceEntry*> failures() const;
};

/// Reduces the S-element of every overlap among `rules`. `threads` > 1
/// reduces overlaps concurrently; the report order does not depend on it.
ConfluenceReport check_confluence(std::span<const RewriteRule> rules, const MonomialOrder& order, int max_arity,
                                  int threads = 1);

/// Shuffle monomials of arity n over `alphabet` divisible by no rule lhs.
BigInt count_normal_monomials(const Alphabet& alphabet, std::span<const RewriteRule> rules, int n);

}  // namespace freeop
