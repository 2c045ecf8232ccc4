#include "freeop/shuffle_element.hpp"

#include <algorithm>
#include <cctype>

namespace freeop {

ShuffleElement::ShuffleElement(const ShuffleMonomial& m, const BigRational& c) { add_term(m, c); }

BigRational ShuffleElement::coefficient(const ShuffleMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void ShuffleElement::add_term(const ShuffleMonomial& m, const BigRational& c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.begin()->first.arity() != m.arity())
    throw std::invalid_argument("element mixes arities " + std::to_string(arity()) + " and " +
                                std::to_string(m.arity()));
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ShuffleElement& ShuffleElement::operator+=(const ShuffleElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ShuffleElement& ShuffleElement::operator-=(const ShuffleElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ShuffleElement ShuffleElement::operator+(const ShuffleElement& other) const {
  ShuffleElement r = *this;
  r += other;
  return r;
}

ShuffleElement ShuffleElement::operator-(const ShuffleElement& other) const {
  ShuffleElement r = *this;
  r -= other;
  return r;
}

ShuffleElement ShuffleElement::operator*(const BigRational& scalar) const {
  ShuffleElement r;
  if (scalar == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * scalar);
  return r;
}

std::string rational_to_string(const BigRational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string ShuffleElement::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [&](auto* a, auto* b) { return order.less(b->first, a->first); });
  std::string s;
  for (const auto* t : sorted) {
    const BigRational& c = t->second;
    const BigRational mag = c < 0 ? BigRational(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += rational_to_string(mag) + "*";
    s += t->first.to_string();
  }
  return s;
}

namespace {

class ElementParser {
 public:
  explicit ElementParser(std::string_view text) : text_(text) {}

  ShuffleElement parse() {
    ShuffleElement result;
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty element", pos_);
    bool first = true;
    while (pos_ < text_.size()) {
      BigRational sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        if (text_[pos_] == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      first = false;
      BigRational coefficient = 1;
      bool has_coefficient = false;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        coefficient = read_rational();
        has_coefficient = true;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '*') {
          ++pos_;
          skip_ws();
        }
      }
      if (pos_ >= text_.size() || text_[pos_] == '+' || text_[pos_] == '-') {
        // A bare number: only zero is meaningful in a homogeneous element.
        if (!has_coefficient || coefficient != 0) throw ParseError("expected a monomial", pos_);
        skip_ws();
        continue;
      }
      const std::size_t start = pos_;
      const std::size_t end = monomial_end();
      try {
        result.add_term(ShuffleMonomial::parse(text_.substr(start, end - start)), sign * coefficient);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), start + e.position());
      }
      pos_ = end;
      skip_ws();
    }
    return result;
  }

 private:
  BigRational read_rational() {
    BigInt num(read_digits());
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      BigInt den(read_digits());
      if (den == 0) throw ParseError("zero denominator", pos_);
      return BigRational(num, den);
    }
    return BigRational(num);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  // End of the monomial starting at pos_: after the matching ')'.
  std::size_t monomial_end() const {
    std::size_t p = pos_;
    while (p < text_.size() && text_[p] != '(') {
      if (text_[p] == '+' || text_[p] == '-') throw ParseError("expected '(' in monomial", p);
      ++p;
    }
    int depth = 0;
    for (; p < text_.size(); ++p) {
      if (text_[p] == '(') ++depth;
      else if (text_[p] == ')' && --depth == 0) return p + 1;
    }
    throw ParseError("unbalanced parentheses", text_.size());
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ShuffleElement ShuffleElement::parse(std::string_view text) { return ElementParser(text).parse(); }

}  // namespace freeop
