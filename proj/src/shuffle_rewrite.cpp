#include "freeop/shuffle_rewrite.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <map>
#include <set>
#include <sstream>

namespace freeop {

bool Embedding::shares_vertex_with(const Embedding& other) const {
  for (const auto& v : vertices)
    if (std::find(other.vertices.begin(), other.vertices.end(), v) != other.vertices.end()) return true;
  return false;
}

namespace {

bool match(const ShuffleMonomial& node, VertexPath& path, const ShuffleMonomial& pattern, Embedding& e) {
  if (pattern.is_leaf()) {
    e.inputs[pattern.label() - 1] = path;
    return true;
  }
  if (node.is_leaf() || node.symbol() != pattern.symbol() || node.children().size() != pattern.children().size())
    return false;
  e.vertices.push_back(path);
  for (std::size_t j = 0; j < pattern.children().size(); ++j) {
    path.push_back(static_cast<int>(j));
    const bool ok = match(node.children()[j], path, pattern.children()[j], e);
    path.pop_back();
    if (!ok) return false;
  }
  return true;
}

std::optional<Embedding> match_at(const ShuffleMonomial& m, const VertexPath& at, const ShuffleMonomial& pattern) {
  if (pattern.is_leaf()) return std::nullopt;
  Embedding e;
  e.root = at;
  e.inputs.resize(pattern.arity());
  VertexPath path = at;
  if (!match(m.at(at), path, pattern, e)) return std::nullopt;
  for (std::size_t j = 1; j < e.inputs.size(); ++j)
    if (m.at(e.inputs[j - 1]).min_leaf() >= m.at(e.inputs[j]).min_leaf()) return std::nullopt;
  return e;
}

template <class Visit>
void for_each_vertex(const ShuffleMonomial& node, VertexPath& path, Visit&& visit) {
  if (node.is_leaf()) return;
  visit(path);
  for (std::size_t j = 0; j < node.children().size(); ++j) {
    path.push_back(static_cast<int>(j));
    for_each_vertex(node.children()[j], path, visit);
    path.pop_back();
  }
}

ShuffleMonomial plug(const ShuffleMonomial& m, const Embedding& e, const ShuffleMonomial& replacement) {
  if (replacement.is_leaf()) return m.at(e.inputs.at(replacement.label() - 1));
  std::vector<ShuffleMonomial> kids;
  kids.reserve(replacement.children().size());
  for (const auto& c : replacement.children()) kids.push_back(plug(m, e, c));
  return ShuffleMonomial::op(replacement.symbol(), std::move(kids));
}

ShuffleMonomial rebuild(const ShuffleMonomial& node, std::size_t depth, const ShuffleMonomial& m, const Embedding& e,
                        const ShuffleMonomial& replacement) {
  if (depth == e.root.size()) return plug(m, e, replacement);
  std::vector<ShuffleMonomial> kids = node.children();
  const int j = e.root[depth];
  kids[j] = rebuild(node.children()[j], depth + 1, m, e, replacement);
  return ShuffleMonomial::op(node.symbol(), std::move(kids));
}

struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const ShuffleMonomial& a, const ShuffleMonomial& b) const { return order->less(a, b); }
};

using OrderedTerms = std::map<ShuffleMonomial, BigRational, OrderLess>;

void accumulate(OrderedTerms& work, const ShuffleMonomial& m, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = work.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) work.erase(it);
  }
}

// Replaces coefficient * m by coefficient * (its rewrite), checking that every
// new monomial is below m.
void rewrite_term(OrderedTerms& work, const ShuffleMonomial& m, const BigRational& coefficient, const Divisor& d,
                  std::span<const RewriteRule> rules, const MonomialOrder& order) {
  const ShuffleElement replaced = rewrite_at(m, d.embedding, rules[d.rule]);
  for (const auto& [mono, c] : replaced.terms()) {
    if (!order.less(mono, m))
      throw std::logic_error("rewrite step did not decrease: " + m.to_string() + " -> " + mono.to_string());
    accumulate(work, mono, coefficient * c);
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

void collect_symbols(const ShuffleMonomial& m, std::map<std::string, int>& arities) {
  if (m.is_leaf()) return;
  const int arity = static_cast<int>(m.children().size());
  auto [it, inserted] = arities.try_emplace(m.symbol(), arity);
  if (!inserted && it->second != arity)
    throw std::invalid_argument("symbol '" + m.symbol() + "' used with arities " + std::to_string(it->second) +
                                " and " + std::to_string(arity));
  for (const auto& c : m.children()) collect_symbols(c, arities);
}

}  // namespace

std::vector<Embedding> find_embeddings(const ShuffleMonomial& m, const ShuffleMonomial& pattern) {
  std::vector<Embedding> out;
  VertexPath path;
  for_each_vertex(m, path, [&](const VertexPath& at) {
    if (auto e = match_at(m, at, pattern)) out.push_back(std::move(*e));
  });
  return out;
}

std::optional<Embedding> find_divisor(const ShuffleMonomial& m, const ShuffleMonomial& pattern) {
  auto all = find_embeddings(m, pattern);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

ShuffleMonomial substitute(const ShuffleMonomial& m, const Embedding& e, const ShuffleMonomial& replacement) {
  if (replacement.arity() != static_cast<int>(e.inputs.size()))
    throw std::invalid_argument("replacement arity does not match the occurrence");
  return rebuild(m, 0, m, e, replacement);
}

std::string RewriteRule::to_string(const MonomialOrder& order) const {
  return lhs.to_string() + " -> " + rhs.to_string(order);
}

RewriteRule orient(const ShuffleElement& relation, const MonomialOrder& order) {
  if (relation.is_zero()) throw std::invalid_argument("cannot orient the zero relation");
  const ShuffleMonomial* lead = nullptr;
  for (const auto& [m, c] : relation.terms())
    if (!lead || order.less(*lead, m)) lead = &m;
  const BigRational lc = relation.coefficient(*lead);
  ShuffleElement rhs = ShuffleElement(*lead) - relation * (BigRational(1) / lc);
  return {*lead, std::move(rhs)};
}

RewriteSystem RewriteSystem::parse(std::string_view text, std::optional<Alphabet> alphabet) {
  std::vector<ShuffleElement> relations;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  std::map<std::string, int> arities;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string content = trim(raw);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos || content.find('=', eq + 1) != std::string::npos)
      throw ParseError("line " + std::to_string(line) + ": expected exactly one '='", 0);
    ShuffleElement lhs, rhs;
    try {
      lhs = ShuffleElement::parse(content.substr(0, eq));
      rhs = ShuffleElement::parse(content.substr(eq + 1));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line) + ": " + e.what(), e.position());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line) + ": " + e.what());
    }
    if (!lhs.is_zero() && !rhs.is_zero() && lhs.arity() != rhs.arity())
      throw std::invalid_argument("line " + std::to_string(line) + ": sides have different arities");
    for (const auto* side : {&lhs, &rhs})
      for (const auto& [m, c] : side->terms()) collect_symbols(m, arities);
    ShuffleElement relation = lhs - rhs;
    if (relation.is_zero())
      throw std::invalid_argument("line " + std::to_string(line) + ": relation is trivially zero");
    relations.push_back(std::move(relation));
  }
  if (!alphabet) {
    std::vector<Generator> gens;
    for (const auto& [name, arity] : arities) gens.push_back({name, arity});
    alphabet = Alphabet(std::move(gens));
  }
  for (const auto& [name, arity] : arities) {
    if (!alphabet->contains(name))
      throw std::invalid_argument("symbol '" + name + "' is not in the alphabet " + alphabet->to_string());
    if (alphabet->arity(name) != arity)
      throw std::invalid_argument("symbol '" + name + "' used with arity " + std::to_string(arity));
  }
  if (!alphabet->all_binary()) throw std::invalid_argument("only binary generators are supported");
  RewriteSystem system{MonomialOrder(*alphabet), {}};
  for (const auto& r : relations) system.rules.push_back(orient(r, system.order));
  return system;
}

RewriteSystem RewriteSystem::load(const std::string& path, std::optional<Alphabet> alphabet) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open rule file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), std::move(alphabet));
}

ShuffleElement rewrite_at(const ShuffleMonomial& m, const Embedding& e, const RewriteRule& rule) {
  ShuffleElement out;
  for (const auto& [mono, c] : rule.rhs.terms()) out.add_term(substitute(m, e, mono), c);
  return out;
}

std::optional<Divisor> first_divisor(const ShuffleMonomial& m, std::span<const RewriteRule> rules) {
  std::optional<Divisor> found;
  VertexPath path;
  auto visit = [&](const VertexPath& at) {
    if (found) return;
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (auto e = match_at(m, at, rules[r].lhs)) {
        found = Divisor{r, std::move(*e)};
        return;
      }
    }
  };
  for_each_vertex(m, path, visit);
  return found;
}

std::vector<Divisor> all_divisors(const ShuffleMonomial& m, std::span<const RewriteRule> rules) {
  std::vector<Divisor> out;
  VertexPath path;
  for_each_vertex(m, path, [&](const VertexPath& at) {
    for (std::size_t r = 0; r < rules.size(); ++r)
      if (auto e = match_at(m, at, rules[r].lhs)) out.push_back({r, std::move(*e)});
  });
  return out;
}

bool is_normal(const ShuffleMonomial& m, std::span<const RewriteRule> rules) {
  return !first_divisor(m, rules).has_value();
}

ShuffleElement normal_form(const ShuffleElement& e, std::span<const RewriteRule> rules, const MonomialOrder& order) {
  OrderedTerms work(OrderLess{&order});
  for (const auto& [m, c] : e.terms()) work.emplace(m, c);
  ShuffleElement result;
  while (!work.empty()) {
    auto largest = std::prev(work.end());
    const ShuffleMonomial m = largest->first;
    const BigRational c = largest->second;
    work.erase(largest);
    if (auto d = first_divisor(m, rules)) {
      rewrite_term(work, m, c, *d, rules, order);
    } else {
      result.add_term(m, c);
    }
  }
  return result;
}

ShuffleElement normal_form_randomized(const ShuffleElement& e, std::span<const RewriteRule> rules,
                                      const MonomialOrder& order, std::mt19937_64& rng) {
  OrderedTerms work(OrderLess{&order});
  for (const auto& [m, c] : e.terms()) work.emplace(m, c);
  ShuffleElement result;
  while (!work.empty()) {
    auto it = work.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, work.size() - 1)(rng));
    const ShuffleMonomial m = it->first;
    const BigRational c = it->second;
    work.erase(it);
    const auto divisors = all_divisors(m, rules);
    if (divisors.empty()) {
      result.add_term(m, c);
      continue;
    }
    const auto& d = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
    rewrite_term(work, m, c, d, rules, order);
  }
  return result;
}

std::vector<Overlap> overlaps(const RewriteRule& r1, const RewriteRule& r2, const MonomialOrder& order, int max_arity,
                              bool same_rule) {
  const Alphabet& full = order.alphabet();
  if (!full.all_binary()) throw std::invalid_argument("overlaps: binary generators only");
  std::map<std::string, int> used;
  collect_symbols(r1.lhs, used);
  collect_symbols(r2.lhs, used);
  std::vector<Generator> gens;
  for (const auto& g : full.generators())
    if (used.contains(g.name)) gens.push_back(g);
  const Alphabet local(std::move(gens));

  // A common multiple covered by the two occurrences has at most
  // |V1| + |V2| - 1 vertices.
  const int vertex_bound = r1.lhs.vertex_count() + r2.lhs.vertex_count() - 1;
  const int lowest = std::max(r1.lhs.arity(), r2.lhs.arity());
  const int highest = std::min(max_arity, vertex_bound + 1);

  std::vector<Overlap> out;
  for (int k = lowest; k <= highest; ++k) {
    std::vector<Overlap> level;
    for (const auto& m : enumerate_shuffle_trees(local, k)) {
      const auto first = find_embeddings(m, r1.lhs);
      if (first.empty()) continue;
      const auto second = same_rule ? first : find_embeddings(m, r2.lhs);
      for (std::size_t i = 0; i < first.size(); ++i) {
        for (std::size_t j = same_rule ? i + 1 : 0; j < second.size(); ++j) {
          const Embedding& a = first[i];
          const Embedding& b = second[j];
          if (!a.shares_vertex_with(b)) continue;
          std::set<VertexPath> covered(a.vertices.begin(), a.vertices.end());
          covered.insert(b.vertices.begin(), b.vertices.end());
          if (static_cast<int>(covered.size()) != m.vertex_count()) continue;
          level.push_back({m, a, b, rewrite_at(m, a, r1) - rewrite_at(m, b, r2)});
        }
      }
    }
    std::stable_sort(level.begin(), level.end(), [&](const Overlap& x, const Overlap& y) {
      if (x.monomial != y.monomial) return order.less(y.monomial, x.monomial);
      if (x.first.root != y.first.root) return x.first.root < y.first.root;
      return x.second.root < y.second.root;
    });
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

std::vector<const ConfluenceEntry*> ConfluenceReport::failures() const {
  std::vector<const ConfluenceEntry*> out;
  for (const auto& e : entries)
    if (!e.reduced.is_zero()) out.push_back(&e);
  return out;
}

ConfluenceReport check_confluence(std::span<const RewriteRule> rules, const MonomialOrder& order, int max_arity,
                                  int threads) {
  ConfluenceReport report;
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = i; j < rules.size(); ++j)
      for (auto& o : overlaps(rules[i], rules[j], order, max_arity, i == j))
        report.entries.push_back({i, j, std::move(o), {}});

  auto reduce = [&](std::size_t k) {
    report.entries[k].reduced = normal_form(report.entries[k].overlap.s_element, rules, order);
  };
  if (threads <= 1) {
    for (std::size_t k = 0; k < report.entries.size(); ++k) reduce(k);
  } else {
    for (std::size_t start = 0; start < report.entries.size(); start += static_cast<std::size_t>(threads)) {
      std::vector<std::future<void>> batch;
      for (std::size_t k = start; k < std::min(report.entries.size(), start + threads); ++k)
        batch.push_back(std::async(std::launch::async, reduce, k));
      for (auto& f : batch) f.get();
    }
  }
  report.pass = report.failures().empty();
  return report;
}

BigInt count_normal_monomials(const Alphabet& alphabet, std::span<const RewriteRule> rules, int n) {
  BigInt count = 0;
  for (const auto& m : enumerate_shuffle_trees(alphabet, n))
    if (is_normal(m, rules)) ++count;
  return count;
}

}  // namespace freeop
