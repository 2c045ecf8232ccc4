#include "freeop/spnet.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "freeop/comb.hpp"

namespace freeop {

SPNetwork SPNetwork::edge() { return SPNetwork{}; }

SPNetwork SPNetwork::series(std::vector<SPNetwork> parts) { return compose(Kind::series, std::move(parts)); }

SPNetwork SPNetwork::parallel(std::vector<SPNetwork> parts) { return compose(Kind::parallel, std::move(parts)); }

SPNetwork SPNetwork::compose(Kind kind, std::vector<SPNetwork> parts) {
  if (parts.size() < 2) throw std::invalid_argument("composition needs at least two networks");
  SPNetwork net;
  net.kind_ = kind;
  net.edges_ = 0;
  for (auto& p : parts) {
    net.edges_ += p.edges_;
    if (p.kind_ == kind) {
      for (auto& c : p.children_) net.children_.push_back(std::move(c));
    } else {
      net.children_.push_back(std::move(p));
    }
  }
  std::sort(net.children_.begin(), net.children_.end());
  return net;
}

std::string SPNetwork::to_string() const {
  if (kind_ == Kind::edge) return "e";
  std::string s = kind_ == Kind::series ? "S(" : "P(";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i) s += " ";
    s += children_[i].to_string();
  }
  return s + ")";
}

std::strong_ordering operator<=>(const SPNetwork& a, const SPNetwork& b) {
  if (auto c = a.edges_ <=> b.edges_; c != 0) return c;
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(),
                                                b.children_.begin(), b.children_.end());
}

namespace {

class NetworkParser {
 public:
  explicit NetworkParser(std::string_view text) : text_(text) {}

  SPNetwork parse() {
    SPNetwork net = node();
    if (pos_ != text_.size()) fail("trailing input");
    return net;
  }

 private:
  SPNetwork node() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_++];
    if (c == 'e') return SPNetwork::edge();
    if (c != 'S' && c != 'P') fail("expected 'e', 'S' or 'P'");
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    ++pos_;
    std::vector<SPNetwork> kids{node()};
    while (pos_ < text_.size() && text_[pos_] == ' ') {
      ++pos_;
      kids.push_back(node());
    }
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
    ++pos_;
    const auto kind = c == 'S' ? SPNetwork::Kind::series : SPNetwork::Kind::parallel;
    if (kids.size() < 2) fail("a composite network needs at least two children");
    for (const auto& k : kids)
      if (k.kind() == kind) fail("nested composition of the same kind is not canonical");
    if (!std::is_sorted(kids.begin(), kids.end())) fail("children are not in canonical order");
    return kind == SPNetwork::Kind::series ? SPNetwork::series(std::move(kids)) : SPNetwork::parallel(std::move(kids));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("network parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Multisets of size c drawn from p kinds: C(p + c - 1, c).
BigInt multichoose(const BigInt& p, int c) {
  BigInt r = 1;
  for (int i = 0; i < c; ++i) r = r * (p + i) / (i + 1);
  return r;
}

}  // namespace

SPNetwork SPNetwork::parse(std::string_view text) { return NetworkParser(text).parse(); }

std::vector<SPNetwork> enumerate_networks(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("enumerate_networks: n must be in [1, 12]");
  std::vector<std::vector<SPNetwork>> by_size(n + 1);
  by_size[1] = {SPNetwork::edge()};
  for (int k = 2; k <= n; ++k) {
    std::set<SPNetwork> found;
    // Every composite network splits as (one part) + (the rest), so binary
    // compositions of smaller networks reach all of them.
    for (int a = 1; a <= k / 2; ++a) {
      for (const auto& left : by_size[a]) {
        for (const auto& right : by_size[k - a]) {
          found.insert(SPNetwork::series({left, right}));
          found.insert(SPNetwork::parallel({left, right}));
        }
      }
    }
    by_size[k].assign(found.begin(), found.end());
  }
  return by_size[n];
}

BigInt macmahon(int n) {
  if (n < 1) throw std::invalid_argument("macmahon: n must be >= 1");
  if (n == 1) return 1;
  // rooted[k]: networks with k edges whose root is series (equivalently parallel).
  // A series root is a multiset of >= 2 non-series parts; a part of size k is an
  // edge (k = 1) or a parallel-rooted network.
  std::vector<BigInt> rooted(n + 1, 0);
  std::vector<BigInt> part(n + 1, 0);
  part[1] = 1;
  for (int k = 2; k <= n; ++k) {
    // multisets[s][c]: multisets of parts with sizes < k, total size s, c parts (c capped at 2).
    std::vector<std::vector<BigInt>> multisets(k + 1, std::vector<BigInt>(3, 0));
    multisets[0][0] = 1;
    for (int size = 1; size < k; ++size) {
      std::vector<std::vector<BigInt>> next = multisets;
      for (int copies = 1; copies * size <= k; ++copies) {
        const BigInt ways = multichoose(part[size], copies);
        if (ways == 0) break;
        for (int s = 0; s + copies * size <= k; ++s)
          for (int c = 0; c <= 2; ++c)
            if (multisets[s][c] != 0)
              next[s + copies * size][std::min(2, c + copies)] += multisets[s][c] * ways;
      }
      multisets = std::move(next);
    }
    rooted[k] = multisets[k][2];
    part[k] = rooted[k];
  }
  return 2 * rooted[n];
}

SPNetwork tree_to_network(const UnlabeledTree& t) {
  if (t.is_leaf()) return SPNetwork::edge();
  std::vector<SPNetwork> parts;
  for (const auto& c : t.children()) parts.push_back(tree_to_network(c));
  return t.color() == Color::bullet ? SPNetwork::parallel(std::move(parts)) : SPNetwork::series(std::move(parts));
}

UnlabeledTree network_to_tree(const SPNetwork& net) {
  if (net.kind() == SPNetwork::Kind::edge) return UnlabeledTree::leaf();
  std::vector<UnlabeledTree> kids;
  for (const auto& c : net.children()) kids.push_back(network_to_tree(c));
  return UnlabeledTree::vertex(net.kind() == SPNetwork::Kind::parallel ? Color::bullet : Color::circ, std::move(kids));
}

}  // namespace freeop
