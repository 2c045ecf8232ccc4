#include "freeop/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace freeop {

int PolyMonomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int PolyMonomial::exponent(Var v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

PolyMonomial PolyMonomial::operator*(const PolyMonomial& other) const {
  PolyMonomial r;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

PolyMonomial PolyMonomial::swapped() const {
  PolyMonomial r;
  for (auto [v, e] : factors_) {
    v.kind = v.kind == Var::Kind::x ? Var::Kind::y : Var::Kind::x;
    r.factors_.emplace_back(v, e);
  }
  std::sort(r.factors_.begin(), r.factors_.end());
  return r;
}

std::string PolyMonomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += v.to_string();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

bool PolyMonomialOrder::operator()(const PolyMonomial& a, const PolyMonomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  auto ia = a.factors().begin(), ib = b.factors().begin();
  while (ia != a.factors().end() && ib != b.factors().end()) {
    if (ia->first != ib->first) return ia->first < ib->first;  // a has the earlier variable
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return ia != a.factors().end() && ib == b.factors().end();
}

MultiPoly::MultiPoly(long long constant) : MultiPoly(BigInt(constant)) {}

MultiPoly::MultiPoly(const BigInt& constant) { add_term(PolyMonomial{}, constant); }

MultiPoly MultiPoly::variable(Var v) {
  MultiPoly p;
  p.add_term(PolyMonomial::variable(v), 1);
  return p;
}

void MultiPoly::add_term(const PolyMonomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt MultiPoly::coefficient(const PolyMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  MultiPoly r = *this;
  r += other;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  MultiPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly MultiPoly::operator*(const BigInt& scalar) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * scalar);
  return r;
}

MultiPoly MultiPoly::swapped() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m.swapped(), c);
  return r;
}

BigInt MultiPoly::evaluate(const std::function<BigInt(Var)>& value) const {
  BigInt total = 0;
  for (const auto& [m, c] : terms_) {
    BigInt t = c;
    for (const auto& [v, e] : m.factors()) {
      const BigInt base = value(v);
      for (int i = 0; i < e; ++i) t *= base;
    }
    total += t;
  }
  return total;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (m.factors().empty()) {
      s += mag.str();
    } else {
      if (mag != 1) s += mag.str() + "*";
      s += m.to_string();
    }
  }
  return s;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly result;
    skip_ws();
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      result += parse_term() * BigInt(sign);
      first = false;
      skip_ws();
    }
    if (first) fail("empty polynomial");
    return result;
  }

 private:
  MultiPoly parse_term() {
    MultiPoly term(1);
    bool need_factor = true;
    while (need_factor) {
      skip_ws();
      if (pos_ >= text_.size()) fail("unexpected end of input");
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term = term * BigInt(read_digits());
      } else if (c == 'x' || c == 'y') {
        ++pos_;
        const Var v{c == 'x' ? Var::Kind::x : Var::Kind::y, std::stoi(read_digits())};
        int e = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skip_ws();
          e = std::stoi(read_digits());
        }
        for (int i = 0; i < e; ++i) term = term * MultiPoly::variable(v);
      } else {
        fail("unexpected character");
      }
      skip_ws();
      need_factor = pos_ < text_.size() && text_[pos_] == '*';
      if (need_factor) ++pos_;
    }
    return term;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace freeop
