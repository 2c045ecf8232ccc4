// Acceptance suite: one PASS/FAIL line per criterion, exact integer checks,
// each run under its runtime budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "freeop/comb.hpp"
#include "freeop/dims.hpp"
#include "freeop/freeprod.hpp"
#include "freeop/shuffle_rewrite.hpp"
#include "freeop/spnet.hpp"

using namespace freeop;

namespace {

const std::string kData = std::string(FREEOP_SOURCE_DIR) + "/data/";
const std::string kTestData = std::string(FREEOP_SOURCE_DIR) + "/tests/data/";

// Collects the first failed check of a criterion.
struct Check {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

std::string str(const BigInt& v) { return v.str(); }

bool table_equals(const OperadDims& l, const OperadDims& r, const std::vector<long long>& expected, Check& c,
                  const std::string& name) {
  const auto t = free_product_dims(l, r, static_cast<int>(expected.size()));
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    const BigInt got = t.total(static_cast<int>(n));
    c.expect(got == expected[n - 1], name + " n=" + std::to_string(n) + " got " + str(got));
  }
  return c.failure.empty();
}

void dimension_tables(Check& c) {
  for (const auto& [l, r, expected] : std::vector<std::tuple<const char*, const char*, std::vector<long long>>>{
           {"as", "as", {1, 4, 36, 528, 10800}},
           {"lie", "nov", {1, 3, 20, 216, 3274}},
           {"lie", "com", {1, 2, 11, 101, 1299, 21484, 434314}}}) {
    const auto start = std::chrono::steady_clock::now();
    table_equals(builtin_operad(l), builtin_operad(r), expected, c, std::string(l) + "*" + r);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 1.0, std::string(l) + "*" + r + " took more than 1 s");
  }
}

void symbolic_recursion(Check& c) {
  const auto sym = symbolic_dims(5);
  c.expect(sym[1].bullet == MultiPoly::parse("x3 + 3*x2*y2"), "d3 bullet: " + sym[1].bullet.to_string());
  c.expect(sym[2].bullet == MultiPoly::parse("x4 + 6*x3*y2 + 3*x2*y2^2 + 4*x2*y3 + 12*x2^2*y2"),
           "d4 bullet: " + sym[2].bullet.to_string());
  c.expect(sym[3].bullet == MultiPoly::parse("x5 + 10*x4*y2 + 5*x2*y4 + 15*x3*y2^2 + 30*x2^2*y3 + 50*x2*x3*y2 + "
                                             "10*x2*y2*y3 + 90*x2^2*y2^2 + 15*x2^3*y2 + 10*x3*y3"),
           "d5 bullet: " + sym[3].bullet.to_string());
  const auto d5 = MultiPoly::parse(
      "x5 + y5 + 15*x4*y2 + 15*x2*y4 + 20*x3*y3 + 60*x2*x3*y2 + 60*x2*y2*y3 + 45*x3*y2^2 + 45*x2^2*y3 + "
      "180*x2^2*y2^2 + 15*x2^3*y2 + 15*y2^3*x2");
  c.expect(sym[3].total() == d5, "d5: " + sym[3].total().to_string());
  c.expect(sym[3].total().coefficient(MultiPoly::parse("x2^2*y2^2").terms().begin()->first) == 180,
           "coefficient of x2^2*y2^2");
}

void basis_matches_recursion(Check& c) {
  auto compare = [&](const OperadDims& l, const OperadDims& r, const std::string& name) {
    const auto table = free_product_dims(l, r, 5);
    for (int n = 1; n <= 5; ++n) {
      BigInt count = 0;
      for_each_basis_tree(l, r, n, RootFilter::any, [&](const ColoredTree&) { ++count; });
      c.expect(count == table.total(n), name + " n=" + std::to_string(n) + ": " + str(count) + " trees vs " +
                                            str(table.total(n)));
    }
  };
  const auto lie = builtin_operad("lie");
  const auto comas = builtin_operad("com-as");
  compare(lie, comas, "lie*com-as");
  c.expect(enumerate_basis(lie, comas, 4).size() == 67, "lie*com-as n=4 is not 67");
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> entry(0, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<BigInt> a, b;
    for (int k = 2; k <= 5; ++k) {
      a.emplace_back(entry(rng));
      b.emplace_back(entry(rng));
    }
    compare(OperadDims::from_sequence("a", a), OperadDims::from_sequence("b", b), "random #" + std::to_string(trial));
  }
}

void poisson_quotient(Check& c) {
  const auto lie = builtin_operad("lie");
  const auto comas = builtin_operad("com-as");
  const std::vector<VertexPattern> pois{VertexPattern::named("bullet-composite-child")};
  for (int n = 3; n <= 5; ++n) {
    const BigInt q = count_avoiding(lie, comas, n, pois);
    c.expect(q == factorial(n), "n=" + std::to_string(n) + ": " + str(q));
  }
  const BigInt total = free_product_dims(lie, comas, 4).total(4);
  const BigInt quotient = count_avoiding(lie, comas, 4, pois);
  c.expect(total == 67 && quotient == 24 && total - quotient == 43, "n=4 split");
}

void groebner_checks(Check& c) {
  const auto jac = RewriteSystem::load(kData + "lie.rules");
  const auto adm = RewriteSystem::load(kData + "lie-adm.rules");
  c.expect(check_confluence(jac.rules, jac.order, 5).pass, "Jacobi system not confluent");
  c.expect(check_confluence(adm.rules, adm.order, 5).pass, "Lie-adm system not confluent");
  const auto m = ShuffleMonomial::parse("x(x(x(1 2) 3) 4)");
  for (const auto* sys : {&jac, &adm}) {
    const auto e = find_embeddings(m, sys->rules[0].lhs);
    c.expect(e.size() == 2, "expected two occurrences");
    if (e.size() != 2) return;
    const auto a = normal_form(rewrite_at(m, e[0], sys->rules[0]), sys->rules, sys->order);
    const auto b = normal_form(rewrite_at(m, e[1], sys->rules[0]), sys->rules, sys->order);
    c.expect(a == b, "two-path normal forms differ");
  }
  const auto jac_nf = normal_form(ShuffleElement(m), jac.rules, jac.order);
  c.expect(jac_nf == ShuffleElement::parse("x(x(x(1 4) 3) 2) + x(x(1 x(3 4)) 2) + x(x(1 3) x(2 4)) + "
                                           "x(x(1 4) x(2 3)) + x(1 x(x(2 4) 3)) + x(1 x(2 x(3 4)))"),
           "Jacobi normal form: " + jac_nf.to_string(jac.order));
  const auto bad = RewriteSystem::load(kTestData + "lie-adm-corrupted.rules");
  c.expect(!check_confluence(bad.rules, bad.order, 5).pass, "perturbed system passed");
}

void normal_monomials_count_lie_com(Check& c) {
  const auto adm = RewriteSystem::load(kData + "lie-adm.rules");
  const auto table = free_product_dims(builtin_operad("lie"), builtin_operad("com"), 6);
  const std::vector<long long> expected{2, 11, 101, 1299, 21484};
  for (int n = 2; n <= 6; ++n) {
    const BigInt count = count_normal_monomials(Alphabet::binary("x,y"), adm.rules, n);
    c.expect(count == table.total(n) && count == expected[n - 2],
             "n=" + std::to_string(n) + ": " + str(count) + " normal monomials");
  }
}

void macmahon_numbers(Check& c) {
  const std::vector<long long> expected{1, 2, 4, 10, 24, 66, 180};
  for (int n = 1; n <= 7; ++n) c.expect(macmahon(n) == expected[n - 1], "macmahon(" + std::to_string(n) + ")");
  for (int n = 1; n <= 8; ++n) {
    const auto nets = enumerate_networks(n);
    const auto trees = enumerate_unlabeled(n);
    c.expect(nets.size() == macmahon(n), "enumeration n=" + std::to_string(n));
    c.expect(trees.size() == macmahon(n), "unlabeled trees n=" + std::to_string(n));
    for (const auto& net : nets) c.expect(tree_to_network(network_to_tree(net)) == net, "round trip " + net.to_string());
    for (const auto& t : trees) c.expect(network_to_tree(tree_to_network(t)) == t, "round trip " + t.to_string());
  }
}

void property_suites(Check& c) {
  // Shuffle condition.
  try {
    ShuffleMonomial::parse("x(x(2 3) 1)");
    c.expect(false, "x(x(2 3) 1) accepted");
  } catch (const ShuffleConditionError&) {
  }

  // Order admissibility: replacing an occurrence by a smaller monomial lowers the whole.
  const MonomialOrder ord(Alphabet::binary("x,y"));
  const auto patterns = enumerate_shuffle_trees(ord.alphabet(), 3);
  for (const auto& m : enumerate_shuffle_trees(ord.alphabet(), 4))
    for (const auto& p : patterns)
      for (const auto& e : find_embeddings(m, p))
        for (const auto& q : patterns)
          if (ord.less(q, p)) c.expect(ord.less(substitute(m, e, q), m), "admissibility at " + m.to_string());

  // Strict decrease of rewrite steps: a rule oriented upward must be rejected.
  const std::vector<RewriteRule> upward{
      RewriteRule{ShuffleMonomial::parse("x(1 x(2 3))"), ShuffleElement::parse("x(x(1 2) 3)")}};
  try {
    normal_form(ShuffleElement::parse("x(1 x(2 3))"), upward, MonomialOrder(Alphabet::binary("x")));
    c.expect(false, "non-decreasing step accepted");
  } catch (const std::logic_error&) {
  }

  // As * As grafting: identity and associativity.
  const auto as = builtin_operad("as");
  std::vector<std::vector<ColoredTree>> pool(4);
  for (int n = 1; n <= 3; ++n) pool[n] = enumerate_basis(as, as, n);
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> arity(1, 3);
  auto pick = [&](int n) -> const ColoredTree& {
    return pool[n][std::uniform_int_distribution<std::size_t>(0, pool[n].size() - 1)(rng)];
  };
  for (int trial = 0; trial < 250; ++trial) {
    const int a = arity(rng);
    const ColoredTree t = pick(a);
    c.expect(graft(t, std::vector<ColoredTree>(a, ColoredTree::leaf(1))) == t, "right identity");
    c.expect(graft(ColoredTree::leaf(1), std::vector<ColoredTree>{t}) == t, "left identity");
    std::vector<ColoredTree> f, g;
    int total = 0;
    for (int i = 0; i < a; ++i) {
      f.push_back(pick(arity(rng)));
      total += f.back().arity();
    }
    for (int j = 0; j < total; ++j) g.push_back(pick(arity(rng)));
    std::vector<ColoredTree> inner;
    std::size_t offset = 0;
    for (const auto& fi : f) {
      inner.push_back(graft(fi, std::span<const ColoredTree>(g.data() + offset, static_cast<std::size_t>(fi.arity()))));
      offset += static_cast<std::size_t>(fi.arity());
    }
    const auto lhs = graft(graft(t, f), g);
    c.expect(lhs == graft(t, inner), "associativity for " + t.to_string());
    c.expect(!basis_violation(lhs, &as, &as).has_value(), "graft result not a basis tree");
  }

  // Fibers over networks.
  const auto comas = builtin_operad("com-as");
  for (int n = 1; n <= 6; ++n) {
    std::map<SPNetwork, BigInt> fibers;
    BigInt total = 0;
    for_each_basis_tree(comas, comas, n, RootFilter::any, [&](const ColoredTree& t) {
      ++fibers[classify_by_network(t)];
      ++total;
    });
    BigInt sum = 0;
    for (const auto& [net, size] : fibers) sum += size;
    c.expect(sum == total && total == free_product_dims(comas, comas, std::max(n, 2)).total(n),
             "fiber sum n=" + std::to_string(n));
    c.expect(fibers.size() == macmahon(n), "fiber count n=" + std::to_string(n));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {"dimension tables", 3.0, dimension_tables},
      {"symbolic recursion", 5.0, symbolic_recursion},
      {"basis counts match the recursion", 30.0, basis_matches_recursion},
      {"Poisson quotient", 10.0, poisson_quotient},
      {"Groebner checks", 60.0, groebner_checks},
      {"normal monomials count Lie*Com", 300.0, normal_monomials_count_lie_com},
      {"MacMahon numbers", 30.0, macmahon_numbers},
      {"property suites", 120.0, property_suites},
  };
  int failed = 0;
  int index = 0;
  for (const auto& crit : criteria) {
    ++index;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= crit.budget_seconds) c.expect(false, "over budget");
    const bool ok = c.failure.empty();
    if (!ok) ++failed;
    std::printf("%s  %d. %-34s %8.3f s (limit %g s)%s%s\n", ok ? "PASS" : "FAIL", index, crit.name, secs,
                crit.budget_seconds, ok ? "" : "  ", c.failure.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
