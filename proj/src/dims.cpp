#include "freeop/dims.hpp"

#include <stdexcept>

#include "freeop/comb.hpp"

namespace freeop {

OperadDims::OperadDims(std::string name, Formula formula)
    : name_(std::move(name)), formula_(std::move(formula)) {}

OperadDims OperadDims::from_sequence(std::string name, std::vector<BigInt> from_arity2,
                                     std::optional<OperadDims> tail) {
  for (const auto& v : from_arity2)
    if (v < 0) throw std::invalid_argument("operad '" + name + "': negative dimension");
  const int last = static_cast<int>(from_arity2.size()) + 1;
  Formula f = [values = std::move(from_arity2), tail, last, name](int n) -> BigInt {
    if (n <= last) return values[n - 2];
    if (tail) return tail->dim(n);
    throw std::out_of_range("operad '" + name + "' has no dimension for arity " + std::to_string(n));
  };
  OperadDims d(std::move(name), std::move(f));
  if (!tail) d.max_arity_ = last;
  else d.max_arity_ = tail->max_arity_;
  return d;
}

BigInt OperadDims::dim(int n) const {
  if (n < 1) throw std::invalid_argument("arity must be >= 1");
  if (n == 1) return 1;
  if (max_arity_ && n > *max_arity_)
    throw std::out_of_range("operad '" + name_ + "' has no dimension for arity " + std::to_string(n));
  return formula_(n);
}

const std::vector<std::string>& builtin_operad_names() {
  static const std::vector<std::string> names = {"com-as", "as", "lie", "com", "anti-com", "nov"};
  return names;
}

OperadDims builtin_operad(std::string_view name) {
  if (name == "com-as") return {"com-as", [](int) { return BigInt(1); }};
  if (name == "as") return {"as", [](int n) { return factorial(n); }};
  if (name == "lie") return {"lie", [](int n) { return factorial(n - 1); }};
  // Free commutative / anticommutative magma: one binary generator, (2n-3)!!.
  if (name == "com") return {"com", [](int n) { return double_factorial(2 * n - 3); }};
  if (name == "anti-com") return {"anti-com", [](int n) { return double_factorial(2 * n - 3); }};
  if (name == "nov") return {"nov", [](int n) { return binomial(2 * n - 2, n - 1); }};
  throw std::invalid_argument("unknown operad '" + std::string(name) + "'");
}

BigInt DimTable::total(int n) const {
  if (n == 1) return 1;
  if (n < 1 || n > n_max) throw std::out_of_range("arity outside table");
  return bullet[n] + circ[n];
}

namespace {

// d_n^bullet = sum over partitions lambda of n with >= 2 parts of
//   orbit_count(lambda) * x_m * prod c(n_i),  c(1) = 1, c(k) = d_k^circ,
// and symmetrically for d_n^circ.
template <class T, class LeftGen, class RightGen>
void run_recursion(int n_max, LeftGen left, RightGen right, std::vector<T>& bullet,
                   std::vector<T>& circ) {
  bullet.assign(n_max + 1, T(0));
  circ.assign(n_max + 1, T(0));
  if (n_max < 2) return;
  bullet[2] = left(2);
  circ[2] = right(2);
  for (int n = 3; n <= n_max; ++n) {
    T b(0), c(0);
    for (const Partition& p : partitions(n, 2)) {
      const BigInt coefficient = orbit_count(p);
      T under_bullet = left(p.m());
      T under_circ = right(p.m());
      for (int part : p.parts()) {
        if (part == 1) continue;
        under_bullet = under_bullet * circ[part];
        under_circ = under_circ * bullet[part];
      }
      b += under_bullet * coefficient;
      c += under_circ * coefficient;
    }
    bullet[n] = std::move(b);
    circ[n] = std::move(c);
  }
}

}  // namespace

// Numeric tables use the same sum regrouped by block count. With w_1 = 1 and
// w_k = d_k^circ, the set partitions of {1..n} into m blocks weighted by
// prod w_|block| total B(n, m); conditioning on the block of element 1 gives
//   B(n, m) = sum_k C(n-1, k-1) w_k B(n-k, m-1),
// and d_n^bullet = sum_{m >= 2} x_m B(n, m). O(n^3) instead of one term per partition.
DimTable free_product_dims(const OperadDims& left, const OperadDims& right, int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
  DimTable t;
  t.n_max = n_max;
  t.bullet.assign(n_max + 1, 0);
  t.circ.assign(n_max + 1, 0);
  std::vector<BigInt> x(n_max + 1), y(n_max + 1);
  for (int m = 2; m <= n_max; ++m) {
    x[m] = left.dim(m);
    y[m] = right.dim(m);
  }
  std::vector<std::vector<BigInt>> binom(n_max, std::vector<BigInt>(n_max, 0));
  for (int a = 0; a < n_max; ++a) {
    binom[a][0] = 1;
    for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b < a ? binom[a - 1][b] : BigInt(0));
  }
  // under_bullet[n][m]: blocks weighted by circ dimensions (they hang below a bullet vertex).
  std::vector<std::vector<BigInt>> under_bullet(n_max + 1, std::vector<BigInt>(n_max + 1, 0));
  auto under_circ = under_bullet;
  under_bullet[0][0] = under_circ[0][0] = 1;
  under_bullet[1][1] = under_circ[1][1] = 1;
  auto weight = [](const std::vector<BigInt>& d, int k) { return k == 1 ? BigInt(1) : d[k]; };
  for (int n = 2; n <= n_max; ++n) {
    for (int m = 2; m <= n; ++m) {
      BigInt b = 0, c = 0;
      for (int k = 1; k <= n - m + 1; ++k) {
        b += binom[n - 1][k - 1] * weight(t.circ, k) * under_bullet[n - k][m - 1];
        c += binom[n - 1][k - 1] * weight(t.bullet, k) * under_circ[n - k][m - 1];
      }
      under_bullet[n][m] = std::move(b);
      under_circ[n][m] = std::move(c);
      t.bullet[n] += x[m] * under_bullet[n][m];
      t.circ[n] += y[m] * under_circ[n][m];
    }
    under_bullet[n][1] = t.circ[n];
    under_circ[n][1] = t.bullet[n];
  }
  return t;
}

std::vector<SymbolicDims> symbolic_dims(int n_max) {
  if (n_max < 2 || n_max > 8) throw std::invalid_argument("symbolic n_max must be in [2, 8]");
  std::vector<MultiPoly> bullet, circ;
  run_recursion<MultiPoly>(
      n_max, [](int m) { return MultiPoly::variable({Var::Kind::x, m}); },
      [](int m) { return MultiPoly::variable({Var::Kind::y, m}); }, bullet, circ);
  std::vector<SymbolicDims> out;
  for (int n = 2; n <= n_max; ++n) out.push_back({n, bullet[n], circ[n]});
  return out;
}

}  // namespace freeop
