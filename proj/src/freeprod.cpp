#include "freeop/freeprod.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace freeop {

namespace {

struct Enumerator {
  const OperadDims& left;
  const OperadDims& right;
  std::map<std::pair<int, int>, BigInt> dim_cache;

  long long dim(Color c, int m) {
    auto key = std::make_pair(c == Color::bullet ? 0 : 1, m);
    auto it = dim_cache.find(key);
    if (it == dim_cache.end())
      it = dim_cache.emplace(key, c == Color::bullet ? left.dim(m) : right.dim(m)).first;
    if (it->second > 1'000'000) throw std::out_of_range("decoration space too large to enumerate");
    return it->second.convert_to<long long>();
  }

  // Set partitions of `labels` into >= 2 blocks, blocks ordered by minimum.
  void for_each_partition(const std::vector<int>& labels,
                          const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> blocks;
    auto place = [&](std::size_t i, auto&& self) -> void {
      if (i == labels.size()) {
        if (blocks.size() >= 2) visit(blocks);
        return;
      }
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b].push_back(labels[i]);
        self(i + 1, self);
        blocks[b].pop_back();
      }
      blocks.push_back({labels[i]});
      self(i + 1, self);
      blocks.pop_back();
    };
    place(0, place);
  }

  void rooted(const std::vector<int>& labels, Color root,
              const std::function<void(const ColoredTree&)>& visit) {
    for_each_partition(labels, [&](const std::vector<std::vector<int>>& blocks) {
      const long long decorations = dim(root, static_cast<int>(blocks.size()));
      if (decorations == 0) return;
      std::vector<ColoredTree> kids;
      kids.reserve(blocks.size());
      auto product = [&](std::size_t i, auto&& self) -> void {
        if (i == blocks.size()) {
          for (long long d = 0; d < decorations; ++d)
            visit(ColoredTree::vertex(root, static_cast<int>(d), kids));
          return;
        }
        if (blocks[i].size() == 1) {
          kids.push_back(ColoredTree::leaf(blocks[i][0]));
          self(i + 1, self);
          kids.pop_back();
          return;
        }
        rooted(blocks[i], opposite(root), [&](const ColoredTree& sub) {
          kids.push_back(sub);
          self(i + 1, self);
          kids.pop_back();
        });
      };
      product(0, product);
    });
  }
};

void collect_unlabeled(int n, Color root, std::map<std::pair<int, Color>, std::vector<UnlabeledTree>>& memo);

const std::vector<UnlabeledTree>& unlabeled_rooted(int n, Color root,
                                                   std::map<std::pair<int, Color>, std::vector<UnlabeledTree>>& memo) {
  auto key = std::make_pair(n, root);
  if (!memo.contains(key)) collect_unlabeled(n, root, memo);
  return memo.at(key);
}

// Multisets of >= 2 children (leaves or opposite-colour vertices) of total size n,
// generated as non-decreasing sequences in structural order.
void collect_unlabeled(int n, Color root, std::map<std::pair<int, Color>, std::vector<UnlabeledTree>>& memo) {
  std::vector<UnlabeledTree> pool{UnlabeledTree::leaf()};
  for (int k = 2; k < n; ++k) {
    const auto& sub = unlabeled_rooted(k, opposite(root), memo);
    pool.insert(pool.end(), sub.begin(), sub.end());
  }
  std::vector<UnlabeledTree> out;
  std::vector<UnlabeledTree> chosen;
  auto pick = [&](std::size_t start, int remaining, auto&& self) -> void {
    if (remaining == 0) {
      if (chosen.size() >= 2) out.push_back(UnlabeledTree::vertex(root, chosen));
      return;
    }
    for (std::size_t i = start; i < pool.size() && pool[i].size() <= remaining; ++i) {
      chosen.push_back(pool[i]);
      self(i, remaining - pool[i].size(), self);
      chosen.pop_back();
    }
  };
  pick(0, n, pick);
  std::sort(out.begin(), out.end());
  memo[{n, root}] = std::move(out);
}

}  // namespace

void for_each_basis_tree(const OperadDims& left, const OperadDims& right, int n, RootFilter root,
                         const std::function<void(const ColoredTree&)>& visit) {
  if (n < 1) throw std::invalid_argument("arity must be >= 1");
  if (n == 1) {
    visit(ColoredTree::leaf(1));
    return;
  }
  Enumerator e{left, right, {}};
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  if (root != RootFilter::circ) e.rooted(labels, Color::bullet, visit);
  if (root != RootFilter::bullet) e.rooted(labels, Color::circ, visit);
}

std::vector<ColoredTree> enumerate_basis(const OperadDims& left, const OperadDims& right, int n,
                                         RootFilter root) {
  std::vector<ColoredTree> out;
  for_each_basis_tree(left, right, n, root, [&](const ColoredTree& t) { out.push_back(t); });
  return out;
}

bool VertexPattern::matches(const ColoredTree& vertex) const {
  if (vertex.is_leaf() || vertex.color() != target) return false;
  if (!composite_child) return true;
  return std::any_of(vertex.children().begin(), vertex.children().end(), [&](const ColoredTree& c) {
    return !c.is_leaf() && (!child_color || c.color() == *child_color);
  });
}

VertexPattern VertexPattern::named(std::string_view name) {
  if (name == "bullet") return {Color::bullet, false, std::nullopt};
  if (name == "circ") return {Color::circ, false, std::nullopt};
  if (name == "bullet-composite-child") return {Color::bullet, true, std::nullopt};
  if (name == "circ-composite-child") return {Color::circ, true, std::nullopt};
  throw std::invalid_argument("unknown vertex pattern '" + std::string(name) + "'");
}

bool contains_pattern(const ColoredTree& t, std::span<const VertexPattern> patterns) {
  if (t.is_leaf()) return false;
  for (const auto& p : patterns)
    if (p.matches(t)) return true;
  for (const auto& c : t.children())
    if (contains_pattern(c, patterns)) return true;
  return false;
}

BigInt count_avoiding(const OperadDims& left, const OperadDims& right, int n,
                      std::span<const VertexPattern> patterns) {
  BigInt count = 0;
  for_each_basis_tree(left, right, n, RootFilter::any, [&](const ColoredTree& t) {
    if (!contains_pattern(t, patterns)) ++count;
  });
  return count;
}

std::vector<UnlabeledTree> enumerate_unlabeled(int n, RootFilter root) {
  if (n < 1) throw std::invalid_argument("arity must be >= 1");
  if (n == 1) return {UnlabeledTree::leaf()};
  std::map<std::pair<int, Color>, std::vector<UnlabeledTree>> memo;
  std::vector<UnlabeledTree> out;
  if (root != RootFilter::circ) {
    const auto& b = unlabeled_rooted(n, Color::bullet, memo);
    out.insert(out.end(), b.begin(), b.end());
  }
  if (root != RootFilter::bullet) {
    const auto& c = unlabeled_rooted(n, Color::circ, memo);
    out.insert(out.end(), c.begin(), c.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

SPNetwork classify_by_network(const ColoredTree& t) { return tree_to_network(forget_labels(t)); }

}  // namespace freeop
