#include "fieldunits/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <stdexcept>

#include "fieldunits/checks.hpp"
#include "fieldunits/expr.hpp"
#include "fieldunits/extension.hpp"
#include "fieldunits/hahn.hpp"
#include "fieldunits/perfect_closure.hpp"
#include "fieldunits/ratfunc.hpp"
#include "fieldunits/scan.hpp"
#include "fieldunits/text.hpp"
#include "fieldunits/valuation.hpp"

namespace fieldunits {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string field = "GF(2)";
  std::uint64_t seed = 0;
  bool json = false;
  std::uint64_t bound = 1'000'000;
  std::size_t terms = 8;
  std::string ext;
  std::string group = "Z";
  std::uint64_t prime = 0;
  std::size_t samples = 1000;
  unsigned workers = 0;
  std::string valuation;
  std::string op;
  std::vector<std::string> inputs;
};

// A result in both renderings.
struct Output {
  Json json;
  std::string text;
  int status = kExitOk;
};

std::string power_text(const std::string& base, const std::string& exp, bool single_term) {
  const std::string b = single_term ? base : "(" + base + ")";
  return exp == "1" ? b : b + "^" + (exp[0] == '-' || exp.find('/') != std::string::npos ? "(" + exp + ")" : exp);
}

bool single_term(const std::string& s) { return s.find_first_of("+-") == std::string::npos; }

std::string product_text(const std::string& lead, const std::vector<std::pair<std::string, std::string>>& factors) {
  std::string s = lead;
  for (const auto& [poly, exp] : factors) s += (s.empty() ? "" : " * ") + power_text(poly, exp, single_term(poly));
  return s.empty() ? "1" : s;
}

void require_inputs(const Options& o, std::size_t n) {
  if (o.inputs.size() != n)
    throw ParseError("expected " + std::to_string(n) + " input argument" + (n == 1 ? "" : "s") + ", got " +
                     std::to_string(o.inputs.size()));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <class F>
auto json_field(const Json& j, F&& read) {
  try {
    return read(j);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed decomposition: ") + e.what());
  }
}

Output cmd_classify_scan(const Options& o) {
  const ScanReport r = classify_scan(o.bound, o.workers);
  Output out;
  Json fields = Json::array();
  for (const auto& e : r.entries) {
    fields.push_back({{"q", e.q}, {"family", to_string(e.family)}, {"oracle", e.oracle_indecomposable}});
    out.text += std::to_string(e.q) + " " + to_string(e.family) + (e.oracle_indecomposable ? "" : " (oracle disagrees)") + "\n";
  }
  out.json = {{"bound", r.bound},
              {"mode", to_string(r.mode)},
              {"prime_powers_checked", r.prime_powers_checked},
              {"count", r.entries.size()},
              {"fields", fields},
              {"disagreements", r.disagreements}};
  out.text += std::to_string(r.entries.size()) + " fields, " + std::to_string(r.prime_powers_checked) + " prime powers checked (" +
              to_string(r.mode) + "), " + std::to_string(r.disagreements.size()) + " disagreements";
  if (!r.disagreements.empty()) out.status = kExitDomain;
  return out;
}

Output cmd_factor(const Options& o) {
  require_inputs(o, 1);
  const Field field = parse_field(o.field);
  const PolyFactorization f = factor_poly(parse_poly(field, o.inputs[0]), o.seed);
  Output out;
  Json factors = Json::array();
  std::vector<std::pair<std::string, std::string>> parts;
  for (const auto& pf : f.factors) {
    factors.push_back({{"poly", pf.poly.to_string()}, {"exp", pf.multiplicity}});
    parts.push_back({pf.poly.to_string(), std::to_string(pf.multiplicity)});
  }
  out.json = {{"unit", f.unit.to_string()}, {"factors", factors}};
  out.text = product_text(f.unit.code() == 1 && !parts.empty() ? "" : f.unit.to_string(), parts);
  return out;
}

Json decomposition_json(const UnitDecomposition& d) {
  Json factors = Json::array();
  for (const auto& f : d.factors()) factors.push_back({{"poly", f.poly.to_string()}, {"exp", f.exponent}});
  return {{"constant", d.constant().to_string()}, {"factors", factors}};
}

Output cmd_decompose(const Options& o) {
  require_inputs(o, 1);
  const Field field = parse_field(o.field);
  const UnitDecomposition d = decompose(parse_ratfunc(field, o.inputs[0]), o.seed);
  Output out;
  out.json = decomposition_json(d);
  std::vector<std::pair<std::string, std::string>> parts;
  for (const auto& f : d.factors()) parts.push_back({f.poly.to_string(), std::to_string(f.exponent)});
  out.text = product_text(d.constant().code() == 1 && !parts.empty() ? "" : d.constant().to_string(), parts);
  return out;
}

Output cmd_recompose(const Options& o) {
  require_inputs(o, 1);
  const Field field = parse_field(o.field);
  const Json j = parse_json(o.inputs[0]);
  const auto [constant, factors] = json_field(j, [&](const Json& j) {
    std::vector<UnitFactor> fs;
    for (const auto& f : j.at("factors"))
      fs.push_back({parse_poly(field, f.at("poly").get<std::string>()), f.at("exp").get<std::int64_t>()});
    return std::pair{parse_elem(field, j.at("constant").get<std::string>()), fs};
  });
  const RatFunc q = recompose(UnitDecomposition(constant, factors));
  return {Json(q.to_string()), q.to_string()};
}

Output cmd_rank(const Options& o) {
  if (o.inputs.empty()) throw ParseError("rank needs at least one rational function");
  const Field field = parse_field(o.field);
  std::vector<RatFunc> elems;
  for (const auto& s : o.inputs) elems.push_back(parse_ratfunc(field, s));
  const ExponentMatrix m = exponent_matrix(elems, o.seed);
  Json columns = Json::array();
  for (const auto& c : m.columns) columns.push_back(c.to_string());
  const std::size_t rank = multiplicative_rank(elems, o.seed);
  return {Json{{"rank", rank}, {"columns", columns}, {"matrix", m.rows}}, std::to_string(rank)};
}

Output cmd_padic(const Options& o) {
  require_inputs(o, 1);
  if (o.prime == 0) throw ParseError("padic needs -p <prime>");
  const std::int64_t v = padic_valuation(parse_rational(o.inputs[0]), o.prime);
  return {Json(v), std::to_string(v)};
}

Output cmd_hahn(const Options& o) {
  const Field field = parse_field(o.field);
  const GroupDescriptor group = parse_group(o.group);
  auto series = [&](std::size_t i) { return parse_hahn(field, group, o.inputs.at(i)); };
  auto show = [](const HahnSeries& s) { return Output{Json(s.to_string()), s.to_string()}; };
  if (o.op == "show") return require_inputs(o, 1), show(series(0));
  if (o.op == "add") return require_inputs(o, 2), show(series(0) + series(1));
  if (o.op == "mul") return require_inputs(o, 2), show(series(0) * series(1));
  if (o.op == "inv") {
    require_inputs(o, 1);
    if (o.terms == 0) throw ParseError("--terms must be positive");
    return show(hs_inv(series(0), o.terms));
  }
  if (o.op == "section") return require_inputs(o, 1), show(hs_section(field, parse_group_elem(group, o.inputs[0])));
  if (o.op == "valuation") {
    require_inputs(o, 1);
    const GroupElem g = hs_valuation(series(0));
    return {Json(g.to_string()), g.to_string()};
  }
  if (o.op == "split") {
    require_inputs(o, 1);
    const auto [g, u] = hs_unit_split(series(0));
    return {Json{{"valuation", g.to_string()}, {"unit", u.to_string()}}, g.to_string() + " " + u.to_string()};
  }
  throw ParseError("unknown hahn operation '" + o.op + "' (show, add, mul, inv, section, valuation, split)");
}

Json pc_json(const PCDecomposition& d) {
  Json factors = Json::array();
  for (const auto& f : d.factors()) factors.push_back({{"poly", f.poly.to_string()}, {"exp", f.exponent.to_string()}});
  return {{"factors", factors}};
}

Output cmd_pc(const Options& o) {
  auto show = [](const DyadicRatFunc& q) { return Output{Json(q.to_string()), q.to_string()}; };
  if (o.op == "recompose") {
    require_inputs(o, 1);
    const Json j = parse_json(o.inputs[0]);
    const auto factors = json_field(j, [](const Json& j) {
      std::vector<PCFactor> fs;
      for (const auto& f : j.at("factors"))
        fs.push_back({parse_poly(Field::gf2(), f.at("poly").get<std::string>(), "t"), parse_dyadic(f.at("exp").get<std::string>())});
      return fs;
    });
    return show(pc_recompose(PCDecomposition(factors)));
  }
  require_inputs(o, 1);
  const DyadicRatFunc q = parse_dyadic_ratfunc(o.inputs[0]);
  if (o.op == "show") return show(q);
  if (o.op == "frobenius") return show(frobenius(q));
  if (o.op == "frobenius-inv") return show(frobenius_inv(q));
  if (o.op == "level") {
    const unsigned k = pc_level(q);
    return {Json(k), std::to_string(k)};
  }
  if (o.op == "decompose") {
    const PCDecomposition d = pc_decompose(q, o.seed);
    std::vector<std::pair<std::string, std::string>> parts;
    for (const auto& f : d.factors()) parts.push_back({f.poly.to_string(), f.exponent.to_string()});
    return {pc_json(d), product_text("", parts)};
  }
  throw ParseError("unknown pc operation '" + o.op + "' (show, frobenius, frobenius-inv, level, decompose, recompose)");
}

Output cmd_norm(const Options& o) {
  require_inputs(o, 1);
  if (o.ext.empty()) throw ParseError("norm needs --ext \"GF(q)(t)[y]/(m(y))\"");
  const SimpleExtension ext = parse_extension(o.ext);
  const RatFunc n = norm(parse_ext_elem(ext, o.inputs[0]));
  return {Json(n.to_string()), n.to_string()};
}

template <class T>
Output axiom_output(const ValuationProbe<T>& probe, const Options& o) {
  const AxiomReport<T> r = check_valuation_axioms(probe, o.samples, o.seed);
  Output out;
  out.json = {{"valuation", probe.valuation.name}, {"group", probe.valuation.group.to_string()}, {"pairs", r.pairs_checked},
              {"passed", r.passed()}, {"counterexample", nullptr}};
  out.text = probe.valuation.name + ": " + std::to_string(r.pairs_checked) + " pairs, ";
  if (r.passed()) {
    out.text += "no violations";
  } else {
    const auto& c = *r.counterexample;
    out.json["counterexample"] = {{"axiom", to_string(c.axiom)}, {"x", probe.show(c.x)}, {"y", probe.show(c.y)}};
    out.text += to_string(c.axiom) + " fails at x = " + probe.show(c.x) + ", y = " + probe.show(c.y);
    out.status = kExitDomain;
  }
  return out;
}

Output cmd_axioms(const Options& o) {
  if (o.samples == 0) throw ParseError("--samples must be positive");
  const std::string& v = o.valuation;
  if (v.rfind("padic:", 0) == 0) return axiom_output(padic_probe(static_cast<std::uint64_t>(parse_integer(v.substr(6)))), o);
  if (v.rfind("poly:", 0) == 0) return axiom_output(polynomial_valuation_probe(parse_poly(parse_field(o.field), v.substr(5))), o);
  if (v == "degree") return axiom_output(degree_map_probe(parse_field(o.field)), o);
  if (v == "hahn") return axiom_output(hahn_probe(parse_field(o.field), parse_group(o.group)), o);
  throw ParseError("unknown valuation '" + v + "' (padic:<p>, poly:<f>, degree, hahn)");
}

Output cmd_selftest(const Options& o) {
  const auto suites = run_selftest(o.seed, o.bound);
  Output out;
  Json js = Json::array();
  bool all = true;
  for (const auto& s : suites) {
    Json checks = Json::array();
    for (const auto& c : s.checks) {
      Json jc = {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"passed", c.passed()}};
      if (!c.passed()) jc["first_failure"] = c.first_failure;
      checks.push_back(jc);
    }
    js.push_back({{"suite", s.suite}, {"passed", s.passed()}, {"cases", s.cases()}, {"failures", s.failures()}, {"checks", checks}});
    out.text += std::string(s.passed() ? "PASS " : "FAIL ") + s.suite + " (" + std::to_string(s.cases()) + " cases, " +
                std::to_string(s.failures()) + " failures)\n";
    for (const auto& c : s.checks)
      if (!c.passed()) out.text += "  " + c.name + ": " + c.first_failure + "\n";
    all = all && s.passed();
  }
  out.json = {{"seed", o.seed}, {"passed", all}, {"suites", js}};
  out.text += all ? "all suites passed" : "some suites failed";
  out.status = all ? kExitOk : kExitDomain;
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Unit groups of fields: finite-field classification, F_q(x) factorization, valuations, norms"};
  app.name("fieldunits");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", o.field, "coefficient field, GF(p) or GF(p^n)");
  app.add_option("--seed", o.seed, "seed for every randomized routine");
  app.add_flag("--json", o.json, "print one JSON document");

  auto inputs = [&](CLI::App* sub, const std::string& what) { sub->add_option("inputs", o.inputs, what); };
  auto* scan = app.add_subcommand("classify-scan", "list every q <= bound with indecomposable F_q^x");
  scan->add_option("--bound", o.bound, "upper bound, 2..2^40")->required();
  scan->add_option("--workers", o.workers, "worker threads (0: all cores)");
  auto* fac = app.add_subcommand("factor", "factor a polynomial over --field");
  inputs(fac, "polynomial in x");
  auto* dec = app.add_subcommand("decompose", "constant and irreducible exponents of a rational function");
  inputs(dec, "rational function in x");
  auto* rec = app.add_subcommand("recompose", "inverse of decompose; takes its JSON output");
  inputs(rec, "decomposition JSON");
  auto* rank = app.add_subcommand("rank", "rank of the multiplicative group generated by the inputs, modulo torsion");
  inputs(rank, "rational functions in x");
  auto* padic = app.add_subcommand("padic", "p-adic valuation of a rational number");
  padic->add_option("-p,--prime", o.prime, "the prime p")->required();
  inputs(padic, "rational number a/b");
  auto* hahn = app.add_subcommand("hahn", "Hahn series over --field with exponents in --group");
  hahn->add_option("--group", o.group, "Z, Z^k or Z[1/2]");
  hahn->add_option("--terms", o.terms, "terms of the geometric series used by inv");
  hahn->add_option("op", o.op, "show, add, mul, inv, section, valuation, split")->required();
  inputs(hahn, "series");
  auto* pc = app.add_subcommand("pc", "perfect closure of F_2(t)");
  pc->add_option("op", o.op, "show, frobenius, frobenius-inv, level, decompose, recompose")->required();
  inputs(pc, "element such as t^(1/2)+t^(3/2)");
  auto* nrm = app.add_subcommand("norm", "field norm to F_q(t)");
  nrm->add_option("--ext", o.ext, "extension, e.g. GF(2)(t)[y]/(y^2+y+t)")->required();
  inputs(nrm, "element in y and t");
  auto* ax = app.add_subcommand("axioms", "sample the valuation axioms");
  ax->add_option("valuation", o.valuation, "padic:<p>, poly:<f>, degree or hahn")->required();
  ax->add_option("--samples", o.samples, "number of random pairs");
  ax->add_option("--group", o.group, "value group for hahn");
  auto* self = app.add_subcommand("selftest", "run every oracle cross-check suite");
  self->add_option("--bound", o.bound, "classification scan bound");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fieldunits: " << e.what() << "\n" << "run `fieldunits --help` for usage\n";
    return kExitUsage;
  }

  try {
    Output result;
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "classify-scan") result = cmd_classify_scan(o);
    else if (cmd == "factor") result = cmd_factor(o);
    else if (cmd == "decompose") result = cmd_decompose(o);
    else if (cmd == "recompose") result = cmd_recompose(o);
    else if (cmd == "rank") result = cmd_rank(o);
    else if (cmd == "padic") result = cmd_padic(o);
    else if (cmd == "hahn") result = cmd_hahn(o);
    else if (cmd == "pc") result = cmd_pc(o);
    else if (cmd == "norm") result = cmd_norm(o);
    else if (cmd == "axioms") result = cmd_axioms(o);
    else result = cmd_selftest(o);
    out << (o.json ? result.json.dump() : result.text) << "\n";
    return result.status;
  } catch (const ParseError& e) {
    err << "fieldunits: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "fieldunits: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "fieldunits: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace fieldunits
