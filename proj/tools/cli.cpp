#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "freeop/colored_tree.hpp"
#include "freeop/dims.hpp"
#include "freeop/freeprod.hpp"
#include "freeop/operad_config.hpp"
#include "freeop/shuffle_rewrite.hpp"
#include "freeop/spnet.hpp"

namespace freeop::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxEnumerationArity = 7;

enum class Format { table, json };

struct Options {
  Format format = Format::table;
  std::string left = "as";
  std::string right = "as";
  std::string config;
  int n = 0;
  bool symbolic = false;
  std::string root = "any";
  bool count_only = false;
  std::vector<std::string> patterns;
  std::string rules;
  std::string alphabet;
  int max_arity = 5;
  std::string element;
};

/// Exact integers go out as decimal strings so no consumer rounds them.
std::string big(const BigInt& v) { return v.str(); }

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) line += "  ";
      line += std::string(width[c] - r[c].size(), ' ') + r[c];
    }
    out << line << '\n';
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int env_threads() {
  const char* v = std::getenv("FREEOP_THREADS");
  if (!v) return 1;
  try {
    return std::max(1, std::stoi(v));
  } catch (const std::exception&) {
    return 1;
  }
}

struct Operands {
  OperadDims left;
  OperadDims right;
};

Operands resolve_operands(const Options& o) {
  OperadConfig cfg = o.config.empty() ? OperadConfig{} : OperadConfig::load(o.config);
  return {cfg.resolve(o.left), cfg.resolve(o.right)};
}

void require_range(const char* what, int value, int lo, int hi) {
  if (value < lo || value > hi)
    throw CLI::ValidationError(std::string(what) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                               "], got " + std::to_string(value));
}

RootFilter parse_root(const std::string& s) {
  if (s == "any") return RootFilter::any;
  if (s == "bullet") return RootFilter::bullet;
  if (s == "circ") return RootFilter::circ;
  throw CLI::ValidationError("--root must be any, bullet or circ");
}

std::optional<Alphabet> parse_alphabet(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Alphabet::binary(s);
}

Json alphabet_json(const Alphabet& a) {
  Json arr = Json::array();
  for (const auto& g : a.generators()) arr.push_back(g.name);
  return arr;
}

int cmd_dims(const Options& o, std::ostream& out) {
  if (o.symbolic) {
    require_range("-n", o.n, 2, 8);
    const auto dims = symbolic_dims(o.n);
    if (o.format == Format::json) {
      Json rows = Json::array();
      for (const auto& d : dims)
        rows.push_back({{"n", d.n}, {"bullet", d.bullet.to_string()}, {"circ", d.circ.to_string()},
                        {"total", d.total().to_string()}});
      emit(out, {{"command", "dims"}, {"symbolic", true}, {"n_max", o.n}, {"rows", rows}});
    } else {
      for (const auto& d : dims) {
        out << 'd' << d.n << "_bullet = " << d.bullet.to_string() << '\n';
        out << 'd' << d.n << "_circ = " << d.circ.to_string() << '\n';
      }
    }
    return kExitOk;
  }
  require_range("-n", o.n, 2, 200);
  const auto ops = resolve_operands(o);
  const DimTable t = free_product_dims(ops.left, ops.right, o.n);
  if (o.format == Format::json) {
    Json rows = Json::array();
    rows.push_back({{"n", 1}, {"bullet", nullptr}, {"circ", nullptr}, {"total", "1"}});
    for (int n = 2; n <= o.n; ++n)
      rows.push_back({{"n", n}, {"bullet", big(t.bullet[n])}, {"circ", big(t.circ[n])}, {"total", big(t.total(n))}});
    emit(out, {{"command", "dims"}, {"symbolic", false}, {"left", o.left}, {"right", o.right}, {"n_max", o.n},
               {"rows", rows}});
  } else {
    std::vector<std::vector<std::string>> rows{{"n", "bullet", "circ", "total"}, {"1", "-", "-", "1"}};
    for (int n = 2; n <= o.n; ++n)
      rows.push_back({std::to_string(n), big(t.bullet[n]), big(t.circ[n]), big(t.total(n))});
    print_table(out, rows);
  }
  return kExitOk;
}

int cmd_basis(const Options& o, std::ostream& out) {
  require_range("-n", o.n, 1, kMaxEnumerationArity);
  const auto ops = resolve_operands(o);
  const RootFilter root = parse_root(o.root);
  std::vector<std::string> trees;
  BigInt count = 0;
  for_each_basis_tree(ops.left, ops.right, o.n, root, [&](const ColoredTree& t) {
    ++count;
    if (!o.count_only) trees.push_back(t.to_string());
  });
  if (o.format == Format::json) {
    Json j{{"command", "basis"}, {"left", o.left}, {"right", o.right}, {"n", o.n}, {"root", o.root},
           {"count", big(count)}};
    if (!o.count_only) j["trees"] = trees;
    emit(out, j);
  } else if (o.count_only) {
    out << count << '\n';
  } else {
    for (const auto& t : trees) out << t << '\n';
  }
  return kExitOk;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  require_range("-n", o.n, 1, kMaxEnumerationArity);
  if (o.patterns.empty()) throw CLI::ValidationError("at least one --pattern is required");
  const auto ops = resolve_operands(o);
  std::vector<VertexPattern> patterns;
  for (const auto& p : o.patterns) patterns.push_back(VertexPattern::named(p));
  BigInt total = 0, avoiding = 0;
  for_each_basis_tree(ops.left, ops.right, o.n, RootFilter::any, [&](const ColoredTree& t) {
    ++total;
    if (!contains_pattern(t, patterns)) ++avoiding;
  });
  if (o.format == Format::json) {
    emit(out, {{"command", "quotient"}, {"left", o.left}, {"right", o.right}, {"n", o.n}, {"patterns", o.patterns},
               {"total", big(total)}, {"reduced", big(total - avoiding)}, {"quotient", big(avoiding)}});
  } else {
    print_table(out, {{"total", big(total)}, {"reduced", big(total - avoiding)}, {"quotient", big(avoiding)}});
  }
  return kExitOk;
}

int cmd_sp(const Options& o, std::ostream& out) {
  if (o.count_only) {
    require_range("-n", o.n, 1, 200);
    const BigInt c = macmahon(o.n);
    if (o.format == Format::json) emit(out, {{"command", "sp"}, {"n", o.n}, {"count", big(c)}});
    else out << c << '\n';
    return kExitOk;
  }
  require_range("-n", o.n, 1, 12);
  const auto nets = enumerate_networks(o.n);
  if (o.format == Format::json) {
    Json list = Json::array();
    for (const auto& net : nets)
      list.push_back({{"network", net.to_string()}, {"tree", network_to_tree(net).to_string()}});
    emit(out, {{"command", "sp"}, {"n", o.n}, {"count", std::to_string(nets.size())}, {"networks", list}});
  } else {
    for (const auto& net : nets) out << net.to_string() << '\n';
  }
  return kExitOk;
}

RewriteSystem load_rules(const Options& o) { return RewriteSystem::load(o.rules, parse_alphabet(o.alphabet)); }

int cmd_confluence(const Options& o, std::ostream& out) {
  require_range("--max-arity", o.max_arity, 2, 7);
  const RewriteSystem sys = load_rules(o);
  const ConfluenceReport report = check_confluence(sys.rules, sys.order, o.max_arity, env_threads());
  if (o.format == Format::json) {
    Json rules = Json::array();
    for (const auto& r : sys.rules) rules.push_back(r.to_string(sys.order));
    Json entries = Json::array();
    for (const auto& e : report.entries)
      entries.push_back({{"rules", {e.rule_a, e.rule_b}},
                         {"arity", e.overlap.monomial.arity()},
                         {"monomial", e.overlap.monomial.to_string()},
                         {"s_element", e.overlap.s_element.to_string(sys.order)},
                         {"normal_form", e.reduced.to_string(sys.order)}});
    emit(out, {{"command", "confluence"}, {"alphabet", alphabet_json(sys.order.alphabet())},
               {"max_arity", o.max_arity}, {"rules", rules}, {"overlaps", entries},
               {"result", report.pass ? "PASS" : "FAIL"}});
  } else {
    out << "rules: " << sys.rules.size() << '\n';
    for (const auto& r : sys.rules) out << "  " << r.to_string(sys.order) << '\n';
    out << "overlaps: " << report.entries.size() << '\n';
    for (const auto& e : report.entries) {
      out << "  arity " << e.overlap.monomial.arity() << ": " << e.overlap.monomial.to_string() << " (rules "
          << e.rule_a << "," << e.rule_b << ") -> " << e.reduced.to_string(sys.order) << '\n';
    }
    out << (report.pass ? "PASS" : "FAIL") << '\n';
  }
  return report.pass ? kExitOk : kExitMathFailure;
}

int cmd_count_normal(const Options& o, std::ostream& out) {
  require_range("-n", o.n, 1, kMaxEnumerationArity);
  const RewriteSystem sys = load_rules(o);
  const BigInt c = count_normal_monomials(sys.order.alphabet(), sys.rules, o.n);
  if (o.format == Format::json)
    emit(out, {{"command", "count-normal"}, {"alphabet", alphabet_json(sys.order.alphabet())}, {"n", o.n},
               {"count", big(c)}});
  else
    out << c << '\n';
  return kExitOk;
}

int cmd_normal_form(const Options& o, std::ostream& out) {
  const RewriteSystem sys = load_rules(o);
  const ShuffleElement e = ShuffleElement::parse(o.element);
  for (const auto& [m, c] : e.terms())
    if (m.arity() > 9) throw CLI::ValidationError("element arity too large");
  const ShuffleElement nf = normal_form(e, sys.rules, sys.order);
  if (o.format == Format::json)
    emit(out, {{"command", "normal-form"}, {"input", e.to_string(sys.order)}, {"normal_form", nf.to_string(sys.order)}});
  else
    out << nf.to_string(sys.order) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free products of operads, shuffle-operad rewriting and series-parallel networks", "freeop"};
  app.require_subcommand(1);
  Options o;
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));

  auto add_operads = [&](CLI::App* sub) {
    sub->add_option("--left", o.left, "Left operad (bullet vertices): builtin id or config name");
    sub->add_option("--right", o.right, "Right operad (circ vertices): builtin id or config name");
    sub->add_option("--config", o.config, "Operad config file")->check(CLI::ExistingFile);
  };
  auto add_rules = [&](CLI::App* sub) {
    sub->add_option("--rules", o.rules, "Rule file")->required()->check(CLI::ExistingFile);
    sub->add_option("--alphabet", o.alphabet, "Generators, largest first (default: symbols used, by name)");
  };

  auto* dims = app.add_subcommand("dims", "Dimensions of a free product");
  add_operads(dims);
  dims->add_option("-n", o.n, "Largest arity")->required();
  dims->add_flag("--symbolic", o.symbolic, "Polynomials in x_i, y_i instead of numbers");

  auto* basis = app.add_subcommand("basis", "Enumerate basis trees");
  add_operads(basis);
  basis->add_option("-n", o.n, "Arity")->required();
  basis->add_option("--root", o.root, "any, bullet or circ");
  basis->add_flag("--count", o.count_only, "Only print the number of trees");

  auto* quotient = app.add_subcommand("quotient", "Count basis trees avoiding vertex patterns");
  add_operads(quotient);
  quotient->add_option("-n", o.n, "Arity")->required();
  quotient->add_option("--pattern", o.patterns,
                       "bullet, circ, bullet-composite-child or circ-composite-child (repeatable)");

  auto* sp = app.add_subcommand("sp", "Series-parallel networks");
  sp->add_option("-n", o.n, "Number of edges")->required();
  sp->add_flag("--count", o.count_only, "Only print the MacMahon number");

  auto* confluence = app.add_subcommand("confluence", "Check that a rule set is a Groebner basis");
  add_rules(confluence);
  confluence->add_option("--max-arity", o.max_arity, "Largest overlap arity");

  auto* count_normal = app.add_subcommand("count-normal", "Count normal shuffle monomials");
  add_rules(count_normal);
  count_normal->add_option("-n", o.n, "Arity")->required();

  auto* nf = app.add_subcommand("normal-form", "Reduce a shuffle element");
  add_rules(nf);
  nf->add_option("--element", o.element, "Element text")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  o.format = format == "json" ? Format::json : Format::table;

  try {
    if (dims->parsed()) return cmd_dims(o, out);
    if (basis->parsed()) return cmd_basis(o, out);
    if (quotient->parsed()) return cmd_quotient(o, out);
    if (sp->parsed()) return cmd_sp(o, out);
    if (confluence->parsed()) return cmd_confluence(o, out);
    if (count_normal->parsed()) return cmd_count_normal(o, out);
    if (nf->parsed()) return cmd_normal_form(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace freeop::cli
