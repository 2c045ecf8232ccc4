#include "freeop/shuffle_monomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace freeop {

Alphabet::Alphabet(std::vector<Generator> generators) : generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name.empty()) throw std::invalid_argument("empty generator name");
    if (generators_[i].arity < 1) throw std::invalid_argument("generator arity must be >= 1");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j].name == generators_[i].name)
        throw std::invalid_argument("duplicate generator '" + generators_[i].name + "'");
  }
}

Alphabet Alphabet::binary(std::string_view names) {
  std::vector<Generator> gens;
  std::size_t start = 0;
  while (start <= names.size()) {
    const auto comma = names.find(',', start);
    const auto end = comma == std::string_view::npos ? names.size() : comma;
    std::string name(names.substr(start, end - start));
    name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }), name.end());
    if (name.empty()) throw std::invalid_argument("empty generator name in '" + std::string(names) + "'");
    gens.push_back({name, 2});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Alphabet(std::move(gens));
}

bool Alphabet::contains(std::string_view name) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Generator& g) { return g.name == name; });
}

int Alphabet::rank(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("symbol '" + std::string(name) + "' is not in the alphabet " + to_string());
}

int Alphabet::arity(std::string_view name) const { return generators_[rank(name)].arity; }

bool Alphabet::all_binary() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Generator& g) { return g.arity == 2; });
}

std::string Alphabet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ",";
    s += generators_[i].name;
  }
  return s + "}";
}

ShuffleMonomial ShuffleMonomial::leaf(int label) {
  if (label < 1) throw std::invalid_argument("leaf labels must be positive");
  ShuffleMonomial m;
  m.label_ = label;
  m.min_leaf_ = label;
  return m;
}

ShuffleMonomial ShuffleMonomial::op(std::string symbol, std::vector<ShuffleMonomial> children) {
  if (symbol.empty()) throw std::invalid_argument("empty generator symbol");
  if (children.empty()) throw std::invalid_argument("generator '" + symbol + "' applied to no arguments");
  ShuffleMonomial m;
  m.symbol_ = std::move(symbol);
  m.arity_ = 0;
  m.vertices_ = 1;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i > 0 && children[i - 1].min_leaf_ >= children[i].min_leaf_)
      throw ShuffleConditionError("shuffle condition violated at '" + m.symbol_ + "': child " + std::to_string(i + 1) +
                                  " has smallest leaf " + std::to_string(children[i].min_leaf_) +
                                  ", not larger than " + std::to_string(children[i - 1].min_leaf_));
    m.arity_ += children[i].arity_;
    m.vertices_ += children[i].vertices_;
  }
  m.min_leaf_ = children.front().min_leaf_;
  m.children_ = std::move(children);
  return m;
}

std::string ShuffleMonomial::to_string() const {
  if (is_leaf()) return std::to_string(label_);
  std::string s = symbol_ + "(";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i) s += " ";
    s += children_[i].to_string();
  }
  return s + ")";
}

std::vector<int> ShuffleMonomial::leaf_sequence() const {
  std::vector<int> out;
  auto walk = [&](const ShuffleMonomial& m, auto&& self) -> void {
    if (m.is_leaf()) {
      out.push_back(m.label_);
      return;
    }
    for (const auto& c : m.children_) self(c, self);
  };
  walk(*this, walk);
  return out;
}

const ShuffleMonomial& ShuffleMonomial::at(std::span<const int> path) const {
  const ShuffleMonomial* m = this;
  for (int i : path) m = &m->children_.at(i);
  return *m;
}

std::strong_ordering operator<=>(const ShuffleMonomial& a, const ShuffleMonomial& b) {
  if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_leaf()) return a.label_ <=> b.label_;
  if (auto c = a.symbol_ <=> b.symbol_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(),
                                                b.children_.begin(), b.children_.end());
}

namespace {

class MonomialParser {
 public:
  explicit MonomialParser(std::string_view text) : text_(text) {}

  ShuffleMonomial parse() {
    skip_ws();
    ShuffleMonomial m = node();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input after monomial", pos_);
    auto labels = m.leaf_sequence();
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] != static_cast<int>(i) + 1)
        throw ParseError("leaf labels of '" + m.to_string() + "' are not exactly 1..n", 0);
    return m;
  }

 private:
  ShuffleMonomial node() {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ - start > 9) throw ParseError("leaf label too large", start);
      return ShuffleMonomial::leaf(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
      throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string symbol(text_.substr(start, pos_ - start));
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '(') throw ParseError("expected '(' after '" + symbol + "'", pos_);
    ++pos_;
    std::vector<ShuffleMonomial> args;
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] != ')') {
      args.push_back(node());
      skip_ws();
    }
    if (pos_ >= text_.size()) throw ParseError("missing ')'", pos_);
    if (args.empty()) throw ParseError("'" + symbol + "' needs at least one argument", pos_);
    ++pos_;
    return ShuffleMonomial::op(std::move(symbol), std::move(args));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

ShuffleMonomial relabel(const ShuffleMonomial& m, const std::vector<int>& labels) {
  if (m.is_leaf()) return ShuffleMonomial::leaf(labels[m.label() - 1]);
  std::vector<ShuffleMonomial> kids;
  kids.reserve(m.children().size());
  for (const auto& c : m.children()) kids.push_back(relabel(c, labels));
  return ShuffleMonomial::op(m.symbol(), std::move(kids));
}

}  // namespace

ShuffleMonomial ShuffleMonomial::parse(std::string_view text) { return MonomialParser(text).parse(); }

std::vector<std::vector<int>> MonomialOrder::path_words(const ShuffleMonomial& m) const {
  std::vector<std::vector<int>> words(m.arity() + 1);
  std::vector<int> path;
  auto walk = [&](const ShuffleMonomial& node, auto&& self) -> void {
    if (node.is_leaf()) {
      words.at(node.label()) = path;
      return;
    }
    path.push_back(alphabet_.rank(node.symbol()));
    for (const auto& c : node.children()) self(c, self);
    path.pop_back();
  };
  walk(m, walk);
  return words;
}

std::strong_ordering MonomialOrder::compare(const ShuffleMonomial& a, const ShuffleMonomial& b) const {
  if (a.arity() != b.arity())
    throw std::invalid_argument("cannot compare monomials of arity " + std::to_string(a.arity()) + " and " +
                                std::to_string(b.arity()));
  if (a == b) return std::strong_ordering::equal;
  const auto wa = path_words(a);
  const auto wb = path_words(b);
  for (std::size_t i = 1; i < wa.size(); ++i) {
    if (auto c = wa[i].size() <=> wb[i].size(); c != 0) return c;
    for (std::size_t k = 0; k < wa[i].size(); ++k)
      if (wa[i][k] != wb[i][k]) return wb[i][k] <=> wa[i][k];  // smaller rank is the larger symbol
  }
  const auto sa = a.leaf_sequence();
  const auto sb = b.leaf_sequence();
  if (auto c = std::lexicographical_compare_three_way(sa.begin(), sa.end(), sb.begin(), sb.end()); c != 0) return c;
  // Same path words and leaf order: differ only in symbols, which the words
  // already cover, so this is unreachable for valid monomials.
  return a <=> b;
}

std::vector<ShuffleMonomial> enumerate_shuffle_trees(const Alphabet& alphabet, int n) {
  if (n < 1) throw std::invalid_argument("arity must be >= 1");
  if (!alphabet.all_binary()) throw std::invalid_argument("enumerate_shuffle_trees supports binary generators only");
  // by_size[k]: all trees on leaves 1..k.
  std::vector<std::vector<ShuffleMonomial>> by_size(n + 1);
  by_size[1] = {ShuffleMonomial::leaf(1)};
  for (int k = 2; k <= n; ++k) {
    auto& out = by_size[k];
    for (const auto& g : alphabet.generators()) {
      // Leaf 1 goes to the first block; every non-empty proper choice of the
      // remaining leaves for the second block.
      for (unsigned mask = 1; mask < (1u << (k - 1)); ++mask) {
        std::vector<int> first{1}, second;
        for (int leaf = 2; leaf <= k; ++leaf) ((mask >> (leaf - 2)) & 1u ? second : first).push_back(leaf);
        for (const auto& a : by_size[first.size()]) {
          const auto left = relabel(a, first);
          for (const auto& b : by_size[second.size()])
            out.push_back(ShuffleMonomial::op(g.name, {left, relabel(b, second)}));
        }
      }
    }
  }
  return by_size[n];
}

}  // namespace freeop
