#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "freeop/comb.hpp"
#include "freeop/freeprod.hpp"

namespace freeop {

int permutation_rank(std::span<const int> perm) {
  const int m = static_cast<int>(perm.size());
  int rank = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank = rank * (m - i) + smaller;
  }
  return rank;
}

std::vector<int> permutation_unrank(int rank, int m) {
  if (m < 0 || rank < 0 || BigInt(rank) >= factorial(m)) throw std::invalid_argument("permutation rank out of range");
  std::vector<int> digits(m);
  for (int i = m - 1; i >= 0; --i) {
    digits[i] = rank % (m - i);
    rank /= (m - i);
  }
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> perm;
  perm.reserve(m);
  for (int d : digits) {
    perm.push_back(pool[d]);
    pool.erase(pool.begin() + d);
  }
  return perm;
}

ColoredTree as_as_to_planar(const ColoredTree& canonical) {
  if (canonical.is_leaf()) return canonical;
  const auto& kids = canonical.children();
  const auto order = permutation_unrank(canonical.decoration(), static_cast<int>(kids.size()));
  std::vector<ColoredTree> planar;
  planar.reserve(kids.size());
  for (int i : order) planar.push_back(as_as_to_planar(kids[i]));
  return ColoredTree::vertex(canonical.color(), 0, std::move(planar));
}

ColoredTree as_as_from_planar(const ColoredTree& planar) {
  if (planar.is_leaf()) return planar;
  std::vector<ColoredTree> kids;
  for (const auto& c : planar.children()) kids.push_back(as_as_from_planar(c));
  std::vector<int> sorted_index(kids.size());
  std::iota(sorted_index.begin(), sorted_index.end(), 0);
  std::sort(sorted_index.begin(), sorted_index.end(),
            [&](int a, int b) { return kids[a].min_leaf() < kids[b].min_leaf(); });
  // perm[j] = canonical position of the j-th planar child.
  std::vector<int> perm(kids.size());
  std::vector<ColoredTree> canonical;
  canonical.reserve(kids.size());
  for (std::size_t pos = 0; pos < sorted_index.size(); ++pos) {
    perm[sorted_index[pos]] = static_cast<int>(pos);
    canonical.push_back(kids[sorted_index[pos]]);
  }
  return ColoredTree::vertex(planar.color(), permutation_rank(perm), std::move(canonical));
}

namespace {

ColoredTree shift_labels(const ColoredTree& t, int offset) {
  if (t.is_leaf()) return ColoredTree::leaf(t.label() + offset);
  std::vector<ColoredTree> kids;
  for (const auto& c : t.children()) kids.push_back(shift_labels(c, offset));
  return ColoredTree::vertex(t.color(), t.decoration(), std::move(kids));
}

ColoredTree substitute(const ColoredTree& planar, const std::vector<ColoredTree>& shifted_args) {
  if (planar.is_leaf()) return shifted_args[planar.label() - 1];
  std::vector<ColoredTree> kids;
  for (const auto& c : planar.children()) {
    ColoredTree s = substitute(c, shifted_args);
    if (!s.is_leaf() && s.color() == planar.color()) {
      // Contract the same-colour edge: splice the grandchildren in place.
      kids.insert(kids.end(), s.children().begin(), s.children().end());
    } else {
      kids.push_back(std::move(s));
    }
  }
  return ColoredTree::vertex(planar.color(), 0, std::move(kids));
}

const OperadDims& as_dims() {
  static const OperadDims as = builtin_operad("as");
  return as;
}

void require_as_as_basis(const ColoredTree& t, const char* what) {
  if (auto v = basis_violation(t, &as_dims(), &as_dims()))
    throw std::invalid_argument(std::string("graft: ") + what + " is not an As*As basis tree: " + *v);
}

}  // namespace

ColoredTree graft(const ColoredTree& t, std::span<const ColoredTree> args) {
  require_as_as_basis(t, "outer tree");
  if (static_cast<int>(args.size()) != t.arity())
    throw std::invalid_argument("graft: tree of arity " + std::to_string(t.arity()) + " given " +
                                std::to_string(args.size()) + " arguments");
  std::vector<ColoredTree> shifted;
  shifted.reserve(args.size());
  int offset = 0;
  for (const auto& a : args) {
    require_as_as_basis(a, "argument");
    shifted.push_back(shift_labels(as_as_to_planar(a), offset));
    offset += a.arity();
  }
  return as_as_from_planar(substitute(as_as_to_planar(t), shifted));
}

}  // namespace freeop
