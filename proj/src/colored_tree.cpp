#include "freeop/colored_tree.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "freeop/dims.hpp"

namespace freeop {

std::string_view color_name(Color c) { return c == Color::bullet ? "bullet" : "circ"; }

ColoredTree ColoredTree::leaf(int label) {
  ColoredTree t;
  t.label_ = label;
  t.refresh();
  return t;
}

ColoredTree ColoredTree::vertex(Color color, int decoration, std::vector<ColoredTree> children) {
  if (children.empty()) throw std::invalid_argument("a vertex needs children");
  ColoredTree t;
  t.color_ = color;
  t.decoration_ = decoration;
  t.children_ = std::move(children);
  t.refresh();
  return t;
}

void ColoredTree::refresh() {
  if (children_.empty()) {
    arity_ = 1;
    min_leaf_ = label_;
    return;
  }
  arity_ = 0;
  min_leaf_ = children_.front().min_leaf_;
  for (const auto& c : children_) {
    arity_ += c.arity_;
    min_leaf_ = std::min(min_leaf_, c.min_leaf_);
  }
}

std::vector<int> ColoredTree::leaves() const {
  std::vector<int> out;
  auto walk = [&](const ColoredTree& t, auto&& self) -> void {
    if (t.is_leaf()) {
      out.push_back(t.label_);
      return;
    }
    for (const auto& c : t.children_) self(c, self);
  };
  walk(*this, walk);
  return out;
}

std::string ColoredTree::to_string() const {
  if (is_leaf()) return std::to_string(label_);
  std::string s(color_name(color_));
  s += "[dec=" + std::to_string(decoration_) + "](";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i) s += ", ";
    s += children_[i].to_string();
  }
  return s + ")";
}

ColoredTree ColoredTree::relabeled(const std::vector<int>& relabel) const {
  if (is_leaf()) return leaf(relabel.at(label_));
  std::vector<ColoredTree> kids;
  kids.reserve(children_.size());
  for (const auto& c : children_) kids.push_back(c.relabeled(relabel));
  return vertex(color_, decoration_, std::move(kids));
}

bool operator==(const ColoredTree& a, const ColoredTree& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const ColoredTree& a, const ColoredTree& b) {
  if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_leaf()) return a.label_ <=> b.label_;
  if (auto c = a.color_ <=> b.color_; c != 0) return c;
  if (auto c = a.decoration_ <=> b.decoration_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(),
                                                b.children_.begin(), b.children_.end());
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  ColoredTree parse() {
    ColoredTree t = node();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  ColoredTree node() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) return ColoredTree::leaf(number());
    Color color;
    if (consume("bullet")) color = Color::bullet;
    else if (consume("circ")) color = Color::circ;
    else fail("expected leaf label, 'bullet' or 'circ'");
    expect("[dec=");
    const int dec = number();
    expect("](");
    std::vector<ColoredTree> kids;
    kids.push_back(node());
    skip_ws();
    while (consume(",")) {
      kids.push_back(node());
      skip_ws();
    }
    expect(")");
    return ColoredTree::vertex(color, dec, std::move(kids));
  }

  int number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    skip_ws();
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("tree parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::optional<std::string> vertex_violation(const ColoredTree& t, const OperadDims* left,
                                            const OperadDims* right) {
  if (t.is_leaf()) return std::nullopt;
  const auto& kids = t.children();
  const int m = static_cast<int>(kids.size());
  if (m < 2) return "vertex with fewer than two children: " + t.to_string();
  if (t.decoration() < 0) return "negative decoration: " + t.to_string();
  const OperadDims* dims = t.color() == Color::bullet ? left : right;
  if (dims && BigInt(t.decoration()) >= dims->dim(m))
    return "decoration out of range for arity " + std::to_string(m) + ": " + t.to_string();
  for (int i = 0; i < m; ++i) {
    if (!kids[i].is_leaf() && kids[i].color() == t.color()) return "same-colour edge: " + t.to_string();
    if (i > 0 && kids[i - 1].min_leaf() >= kids[i].min_leaf())
      return "children not ordered by smallest leaf: " + t.to_string();
    if (auto v = vertex_violation(kids[i], left, right)) return v;
  }
  return std::nullopt;
}

}  // namespace

ColoredTree ColoredTree::parse(std::string_view text) { return TreeParser(text).parse(); }

std::optional<std::string> basis_violation(const ColoredTree& t, const OperadDims* left,
                                           const OperadDims* right) {
  auto labels = t.leaves();
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != static_cast<int>(i) + 1) return "leaf labels are not 1..n";
  return vertex_violation(t, left, right);
}

UnlabeledTree UnlabeledTree::leaf() { return UnlabeledTree{}; }

UnlabeledTree UnlabeledTree::vertex(Color color, std::vector<UnlabeledTree> children) {
  if (children.empty()) throw std::invalid_argument("a vertex needs children");
  UnlabeledTree t;
  t.color_ = color;
  std::sort(children.begin(), children.end());
  t.size_ = 0;
  for (const auto& c : children) t.size_ += c.size_;
  t.children_ = std::move(children);
  return t;
}

std::string UnlabeledTree::to_string() const {
  if (is_leaf()) return "*";
  std::string s(color_name(color_));
  s += "(";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i) s += ", ";
    s += children_[i].to_string();
  }
  return s + ")";
}

std::strong_ordering operator<=>(const UnlabeledTree& a, const UnlabeledTree& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_leaf()) return std::strong_ordering::equal;
  if (auto c = a.color_ <=> b.color_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(),
                                                b.children_.begin(), b.children_.end());
}

UnlabeledTree forget_labels(const ColoredTree& t) {
  if (t.is_leaf()) return UnlabeledTree::leaf();
  std::vector<UnlabeledTree> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) kids.push_back(forget_labels(c));
  return UnlabeledTree::vertex(t.color(), std::move(kids));
}

}  // namespace freeop
