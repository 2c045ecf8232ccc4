#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "freeop/comb.hpp"
#include "freeop/dims.hpp"
#include "freeop/shuffle_rewrite.hpp"

using namespace freeop;

namespace {

const std::string kData = std::string(FREEOP_SOURCE_DIR) + "/data/";
const std::string kTestData = std::string(FREEOP_SOURCE_DIR) + "/tests/data/";

ShuffleMonomial M(const char* text) { return ShuffleMonomial::parse(text); }
ShuffleElement E(std::string_view text) { return ShuffleElement::parse(text); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* const kJacobiNormalForm =
    "x(x(x(1 4) 3) 2) + x(x(1 x(3 4)) 2) + x(x(1 3) x(2 4)) + x(x(1 4) x(2 3)) + x(1 x(x(2 4) 3)) + "
    "x(1 x(2 x(3 4)))";

}  // namespace

TEST_CASE("orienting relations") {
  const MonomialOrder ord(Alphabet::binary("x"));
  const auto r = orient(E("x(x(1 2) 3) - x(1 x(2 3)) - x(x(1 3) 2)"), ord);
  CHECK(r.lhs == M("x(x(1 2) 3)"));
  CHECK(r.rhs == E("x(1 x(2 3)) + x(x(1 3) 2)"));
  CHECK(r.to_string(ord) == "x(x(1 2) 3) -> x(x(1 3) 2) + x(1 x(2 3))");
  const auto scaled = orient(E("-2*x(x(1 2) 3) + 2*x(1 x(2 3))"), ord);
  CHECK(scaled.rhs == E("x(1 x(2 3))"));
  CHECK_THROWS_AS(orient(ShuffleElement(), ord), std::invalid_argument);
}

TEST_CASE("rule files") {
  const auto sys = RewriteSystem::load(kData + "lie.rules");
  REQUIRE(sys.rules.size() == 1);
  CHECK(sys.order.alphabet().to_string() == "{x}");
  const auto adm = RewriteSystem::load(kData + "lie-adm.rules");
  REQUIRE(adm.rules.size() == 1);
  CHECK(adm.order.alphabet().to_string() == "{x,y}");
  CHECK(adm.rules[0].lhs == M("x(x(1 2) 3)"));
  CHECK(adm.rules[0].rhs.terms().size() == 11);

  CHECK_THROWS_AS(RewriteSystem::parse("x(1 2) ="), std::invalid_argument);
  CHECK_THROWS_AS(RewriteSystem::parse("x(1 2)"), std::invalid_argument);
  CHECK_THROWS_AS(RewriteSystem::parse("x(1 2 3) = 0"), std::invalid_argument);
  CHECK_THROWS_AS(RewriteSystem::parse("x(1 2) = x(1 2)"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(RewriteSystem::parse("# c\nx(2 1) = 0"), doctest::Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_AS(RewriteSystem::parse("z(1 2) = 0", Alphabet::binary("x,y")), std::invalid_argument);
  CHECK_THROWS_AS(RewriteSystem::load(kData + "missing.rules"), std::invalid_argument);
}

TEST_CASE("Jacobi: both one-step reductions of the overlap reach the same normal form") {
  const auto sys = RewriteSystem::load(kData + "lie.rules");
  const auto& rule = sys.rules[0];
  const auto m = M("x(x(x(1 2) 3) 4)");
  const auto embeddings = find_embeddings(m, rule.lhs);
  REQUIRE(embeddings.size() == 2);
  CHECK(rewrite_at(m, embeddings[0], rule) == E("x(x(x(1 2) 4) 3) + x(x(1 2) x(3 4))"));
  CHECK(rewrite_at(m, embeddings[1], rule) == E("x(x(x(1 3) 2) 4) + x(x(1 x(2 3)) 4)"));
  const auto a = normal_form(rewrite_at(m, embeddings[0], rule), sys.rules, sys.order);
  const auto b = normal_form(rewrite_at(m, embeddings[1], rule), sys.rules, sys.order);
  CHECK(a == E(kJacobiNormalForm));
  CHECK(b == E(kJacobiNormalForm));
  CHECK(normal_form(ShuffleElement(m), sys.rules, sys.order) == E(kJacobiNormalForm));
  for (const auto& [mono, c] : a.terms()) CHECK(is_normal(mono, sys.rules));
}

TEST_CASE("Jacobi overlaps and confluence") {
  const auto sys = RewriteSystem::load(kData + "lie.rules");
  const auto ov = overlaps(sys.rules[0], sys.rules[0], sys.order, 4, true);
  REQUIRE(ov.size() == 1);
  CHECK(ov[0].monomial == M("x(x(x(1 2) 3) 4)"));
  CHECK(overlaps(sys.rules[0], sys.rules[0], sys.order, 3, true).empty());
  const auto report = check_confluence(sys.rules, sys.order, 4);
  CHECK(report.pass);
  CHECK(report.entries.size() == 1);
  CHECK(report.failures().empty());
  CHECK(check_confluence(sys.rules, sys.order, 5).pass);
}

TEST_CASE("Jacobi normal monomials are counted by (n-1)!") {
  const auto sys = RewriteSystem::load(kData + "lie.rules");
  for (int n = 1; n <= 6; ++n)
    CHECK(count_normal_monomials(sys.order.alphabet(), sys.rules, n) == factorial(n - 1));
}

TEST_CASE("Lie-admissible: the two reduction paths") {
  const auto sys = RewriteSystem::load(kData + "lie-adm.rules");
  const auto& rule = sys.rules[0];
  const auto m = M("x(x(x(1 2) 3) 4)");
  const auto e = find_embeddings(m, rule.lhs);
  REQUIRE(e.size() == 2);
  const auto outer = E(
      "x(x(1 2) x(3 4)) - x(x(1 2) y(3 4)) + x(x(x(1 2) 4) 3) - x(y(x(1 2) 4) 3) + x(y(x(1 2) 3) 4) - "
      "y(x(1 2) x(3 4)) + y(x(1 2) y(3 4)) - y(x(x(1 2) 4) 3) + y(x(x(1 2) 3) 4) + y(y(x(1 2) 4) 3) - "
      "y(y(x(1 2) 3) 4)");
  const auto inner = E(
      "x(x(1 x(2 3)) 4) - x(x(1 y(2 3)) 4) + x(x(x(1 3) 2) 4) + x(x(y(1 2) 3) 4) - x(x(y(1 3) 2) 4) - "
      "x(y(1 x(2 3)) 4) + x(y(1 y(2 3)) 4) + x(y(x(1 2) 3) 4) - x(y(x(1 3) 2) 4) - x(y(y(1 2) 3) 4) + "
      "x(y(y(1 3) 2) 4)");
  CHECK(rewrite_at(m, e[0], rule) == outer);
  CHECK(rewrite_at(m, e[1], rule) == inner);

  const auto s = E(slurp(kTestData + "lie_adm_s.txt"));
  CHECK(s.terms().size() == 67);
  const auto nf = normal_form(ShuffleElement(m), sys.rules, sys.order);
  CHECK(normal_form(outer, sys.rules, sys.order) == nf);
  CHECK(normal_form(inner, sys.rules, sys.order) == nf);
  CHECK(normal_form(s, sys.rules, sys.order) == nf);
  CHECK(nf == s);
}

TEST_CASE("Lie-admissible confluence and normal monomial counts") {
  const auto sys = RewriteSystem::load(kData + "lie-adm.rules");
  const auto report = check_confluence(sys.rules, sys.order, 4);
  CHECK(report.pass);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].overlap.monomial == M("x(x(x(1 2) 3) 4)"));
  CHECK(report.entries[0].reduced.is_zero());

  const auto lie_com = free_product_dims(builtin_operad("lie"), builtin_operad("com"), 6);
  const std::vector<long long> expected{1, 2, 11, 101, 1299, 21484};
  for (int n = 1; n <= 6; ++n) {
    const BigInt c = count_normal_monomials(sys.order.alphabet(), sys.rules, n);
    CHECK(c == expected[n - 1]);
    CHECK(c == lie_com.total(n));
  }
}

TEST_CASE("a corrupted coefficient breaks confluence") {
  const auto sys = RewriteSystem::load(kTestData + "lie-adm-corrupted.rules");
  const auto report = check_confluence(sys.rules, sys.order, 4);
  CHECK_FALSE(report.pass);
  REQUIRE(report.failures().size() == 1);
  CHECK_FALSE(report.failures()[0]->reduced.is_zero());
}

TEST_CASE("threaded confluence reports are identical") {
  const auto sys = RewriteSystem::parse(
      "x(x(1 2) 3) = x(1 x(2 3))\n"
      "y(y(1 2) 3) = y(1 y(2 3))\n"
      "x(y(1 2) 3) = y(x(1 3) 2)\n");
  const auto one = check_confluence(sys.rules, sys.order, 4, 1);
  const auto many = check_confluence(sys.rules, sys.order, 4, 3);
  REQUIRE(one.entries.size() == many.entries.size());
  CHECK(one.pass == many.pass);
  for (std::size_t i = 0; i < one.entries.size(); ++i) {
    CHECK(one.entries[i].overlap.monomial == many.entries[i].overlap.monomial);
    CHECK(one.entries[i].reduced == many.entries[i].reduced);
  }
}

TEST_CASE("normal forms do not depend on the reduction strategy") {
  const auto sys = RewriteSystem::load(kData + "lie-adm.rules");
  auto monomials = enumerate_shuffle_trees(sys.order.alphabet(), 4);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
  for (int trial = 0; trial < 25; ++trial) {
    ShuffleElement e;
    for (int k = 0; k < 4; ++k) e.add_term(monomials[pick(rng)], coeff(rng));
    const auto reference = normal_form(e, sys.rules, sys.order);
    for (const auto& [mono, c] : reference.terms()) CHECK(is_normal(mono, sys.rules));
    for (int run = 0; run < 3; ++run) CHECK(normal_form_randomized(e, sys.rules, sys.order, rng) == reference);
  }
}

TEST_CASE("a rule that does not decrease is rejected during reduction") {
  const MonomialOrder ord(Alphabet::binary("x"));
  const std::vector<RewriteRule> bad{RewriteRule{M("x(1 x(2 3))"), E("x(x(1 2) 3)")}};
  CHECK_THROWS_AS(normal_form(E("x(1 x(2 3))"), bad, ord), std::logic_error);
}
