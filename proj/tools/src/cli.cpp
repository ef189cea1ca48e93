#include "mvspec/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>

#include "mvspec/axioms.hpp"
#include "mvspec/conrad.hpp"
#include "mvspec/error.hpp"
#include "mvspec/literal.hpp"
#include "mvspec/localize.hpp"
#include "mvspec/spectrum.hpp"
#include "mvspec/verify.hpp"

namespace mvspec {

namespace {

struct Options {
  std::string algebra;
  std::string at;
  std::string element;
  std::string filter;
  std::string dot;
  std::string format = "text";
  std::uint64_t window = 5;
  bool minimal = false;
};

// Output of one verb: plain lines plus, for `verify`, the structured checks.
struct Report {
  std::vector<std::string> lines;
  std::vector<CheckResult> checks;
  int code = kExitPass;
};

Filter require_at(const AlgebraPtr& a, const Options& o, const char* verb) {
  if (o.at.empty()) throw PreconditionError(std::string(verb) + " needs --at <filter>");
  return parse_filter(a, o.at);
}

Report do_parse(const AlgebraPtr& a, const Options& o) {
  Report r;
  r.lines.push_back("algebra " + a->name());
  if (!o.element.empty()) r.lines.push_back("element " + format_element(*a, parse_element(*a, o.element)));
  if (!o.filter.empty()) r.lines.push_back("filter " + format_filter(parse_filter(a, o.filter)));
  return r;
}

Report do_axioms(const AlgebraPtr& a, const Options& o) {
  Report r;
  for (const auto& [label, rep] : {std::pair{"mv", check_mv_axioms(*a, o.window)},
                                   std::pair{"order", check_order_properties(*a, o.window)}}) {
    std::string line = std::string(label) + " " + rep.describe();
    r.lines.push_back(line);
    if (!rep.passed) r.code = kExitCheckFailure;
  }
  return r;
}

Report do_pspec(const AlgebraPtr& a, const Options& o, std::ostream& out) {
  std::optional<Filter> at;
  if (!o.at.empty()) at = parse_filter(a, o.at);
  const auto poset = spectrum(a, o.minimal ? SpectrumKind::minimal : SpectrumKind::prime, at);
  Report r;
  r.lines.push_back(std::string(o.minimal ? "minimal" : "prime") + " spectrum of " + a->name() +
                    (at ? " at " + at->literal() : "") + ": " + std::to_string(poset.size()) + " node(s)");
  for (std::size_t i = 0; i < poset.size(); ++i) r.lines.push_back("  node " + poset.name(i));
  for (std::size_t i = 0; i < poset.size(); ++i)
    for (std::size_t j = 0; j < poset.size(); ++j)
      if (poset.covers(i, j)) r.lines.push_back("  cover " + poset.name(i) + " < " + poset.name(j));
  if (!o.dot.empty()) {
    const std::string dot = to_dot(poset);
    if (o.dot == "-") {
      out << dot;
      r.lines.clear();
    } else {
      std::ofstream file(o.dot, std::ios::binary);
      if (!file) throw PreconditionError("cannot write " + o.dot);
      file << dot;
      r.lines.push_back("wrote " + o.dot);
    }
  }
  return r;
}

Report do_counits(const AlgebraPtr& a, const Options& o) {
  Report r;
  const auto us = counits(*a, o.window);
  r.lines.push_back(std::to_string(us.size()) + " counit(s) of " + a->name() +
                    (a->is_finite() ? "" : " with co-ordinates <= " + std::to_string(o.window)));
  for (const auto& u : us) {
    const auto w = is_counit(*a, u);
    r.lines.push_back("  " + a->format(u) + " witness " + a->format(w->v));
  }
  return r;
}

Report do_conrad(const AlgebraPtr& a) {
  const Filter n = conrad_filter(a);
  return Report{{n.is_whole() ? n.literal() + " (improper)" : n.literal()}, {}, kExitPass};
}

Report do_ell(const AlgebraPtr& a, const Options& o) {
  const Filter p = require_at(a, o, "ell");
  return Report{{"ell(" + p.literal() + ") = " + ell(p).literal()}, {}, kExitPass};
}

Report do_localize(const AlgebraPtr& a, const Options& o) {
  const Filter p = require_at(a, o, "localize");
  const auto iso = spectrum_iso_check(p, o.window);
  Report r;
  r.lines.push_back("quotient " + iso.quotient_name);
  r.lines.push_back("ell(" + p.literal() + ") = " + ell(p).literal());
  std::string text = iso.describe();
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    r.lines.push_back(text.substr(start, end - start));
    start = end == std::string::npos ? text.size() : end + 1;
  }
  return r;
}

Report do_verify(const AlgebraPtr& a, const Options& o) {
  Report r;
  r.checks = verify_all(a, o.window);
  for (const auto& c : r.checks) {
    r.lines.push_back(c.line());
    if (!c.passed) r.code = kExitCheckFailure;
  }
  return r;
}

Report do_catalog() {
  Report r;
  for (const auto& e : catalog_entries()) r.lines.push_back(e);
  return r;
}

void emit(const std::string& verb, const std::string& algebra, const Report& r, const std::string& format,
          std::ostream& out) {
  if (format == "text") {
    for (const auto& l : r.lines) out << l << '\n';
    return;
  }
  nlohmann::ordered_json doc;
  doc["verb"] = verb;
  if (!algebra.empty()) doc["algebra"] = algebra;
  doc["exit"] = r.code;
  if (r.checks.empty()) {
    doc["lines"] = r.lines;
  } else {
    auto& checks = doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime spectra, Conrad filters and localization of MV-algebras", "mvspec"};
  app.require_subcommand(1);
  Options o;

  auto add_verb = [&](const char* name, const char* help, bool needs_algebra) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (needs_algebra) sub->add_option("algebra", o.algebra, "Algebra signature, e.g. product[chang,lex:2]")->required();
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    return sub;
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--window,-w", o.window, "Largest Lex co-ordinate enumerated on symbolic algebras")
        ->capture_default_str();
  };

  CLI::App* parse = add_verb("parse", "Parse and print canonical literals", true);
  parse->add_option("--element,-e", o.element, "Element literal to parse against the algebra");
  parse->add_option("--filter,-f", o.filter, "Filter literal to parse against the algebra");
  CLI::App* axioms = add_verb("axioms", "Check the MV axioms and order properties", true);
  add_window(axioms);
  CLI::App* pspec = add_verb("pspec", "Print the prime (or minimal prime) spectrum", true);
  pspec->add_option("--at", o.at, "Restrict to primes comparable with this prime filter");
  pspec->add_flag("--minimal", o.minimal, "Minimal primes only");
  pspec->add_option("--dot", o.dot, "Write the Hasse diagram in DOT format to this path ('-' for stdout)");
  CLI::App* counit = add_verb("counits", "List counits with witnesses", true);
  add_window(counit);
  add_verb("conrad", "Print the Conrad filter", true);
  CLI::App* ellv = add_verb("ell", "Print ell(P) for a prime P", true);
  ellv->add_option("--at", o.at, "Prime filter P")->required();
  CLI::App* loc = add_verb("localize", "Localize at a prime and report the spectrum isomorphism", true);
  loc->add_option("--at", o.at, "Prime filter P")->required();
  add_window(loc);
  CLI::App* ver = add_verb("verify", "Run every property suite", true);
  add_window(ver);
  add_verb("catalog", "List the built-in catalog", false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  CLI::App* verb = app.get_subcommands().front();
  const std::string name = verb->get_name();
  try {
    Report r;
    AlgebraPtr a;
    if (name != "catalog") a = parse_algebra(o.algebra);
    if (name == "parse") r = do_parse(a, o);
    else if (name == "axioms") r = do_axioms(a, o);
    else if (name == "pspec") r = do_pspec(a, o, out);
    else if (name == "counits") r = do_counits(a, o);
    else if (name == "conrad") r = do_conrad(a);
    else if (name == "ell") r = do_ell(a, o);
    else if (name == "localize") r = do_localize(a, o);
    else if (name == "verify") r = do_verify(a, o);
    else r = do_catalog();
    emit(name, a ? a->name() : std::string(), r, o.format, out);
    return r.code;
  } catch (const InvariantViolation& e) {
    err << "mvspec " << name << ": invariant violated: " << e.what() << '\n';
    return kExitCheckFailure;
  } catch (const Error& e) {
    err << "mvspec " << name << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace mvspec
