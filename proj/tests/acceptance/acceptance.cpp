// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "mvspec/axioms.hpp"
#include "mvspec/cli.hpp"
#include "mvspec/conrad.hpp"
#include "mvspec/literal.hpp"
#include "mvspec/localize.hpp"
#include "mvspec/spectrum.hpp"
#include "mvspec/verify.hpp"

using namespace mvspec;

namespace {

constexpr std::uint64_t kWindow = 5;

struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0 means no time limit
  std::function<void(Outcome&)> body;
};

std::vector<AlgebraPtr> catalog() {
  std::vector<AlgebraPtr> out;
  for (const auto& text : catalog_entries()) out.push_back(parse_algebra(text));
  return out;
}

void suite_failures(Outcome& o, const AlgebraPtr& a, const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed) o.failures.push_back(a->name() + ": " + c.line());
}

// Quotients built while running the localization suite: by ell(P), by P and by
// a proper Conrad filter.
std::vector<QuotientAlgebra> suite_quotients(const AlgebraPtr& a) {
  std::vector<Filter> by;
  auto add = [&](const Filter& f) {
    if (!f.is_whole() && std::find(by.begin(), by.end(), f) == by.end()) by.push_back(f);
  };
  for (const auto& p : prime_filters(a)) {
    add(ell(p));
    add(p);
  }
  add(conrad_filter(a));
  std::vector<QuotientAlgebra> out;
  for (const auto& f : by) out.push_back(quotient(f));
  return out;
}

// ---------------------------------------------------------------------------

void axioms(Outcome& o) {
  std::size_t algebras = 0, quotients = 0;
  for (const auto& a : catalog()) {
    const auto r = check_mv_axioms(*a, kWindow);
    o.require(r.passed, a->name() + ": " + r.describe());
    ++algebras;
    for (const auto& q : suite_quotients(a)) {
      const auto rq = check_quotient_axioms(q, kWindow);
      o.require(rq.passed, a->name() + "/" + q.by().literal() + ": " + rq.describe());
      ++quotients;
    }
  }
  o.summary = std::to_string(algebras) + " algebras, " + std::to_string(quotients) + " quotients";
}

void section2(Outcome& o) {
  std::size_t checks = 0;
  for (const auto& a : catalog()) {
    auto conrad = verify_suite(Suite::conrad, a, kWindow);
    suite_failures(o, a, conrad);
    checks += conrad.size();
    for (const auto& c : verify_suite(Suite::spectrum, a, kWindow)) {
      if (c.name != "stem_conrad") continue;
      o.require(c.passed, a->name() + ": " + c.line());
      ++checks;
    }
  }
  o.summary = std::to_string(checks) + " checks";
}

void section3(Outcome& o) {
  std::size_t checks = 0;
  for (const auto& a : catalog()) {
    auto loc = verify_suite(Suite::localize, a, kWindow);
    suite_failures(o, a, loc);
    checks += loc.size();
  }
  o.summary = std::to_string(checks) + " checks";
}

// Window classes of the two-arrow congruence.
std::size_t window_classes(const Filter& by, std::uint64_t window) {
  const Algebra& a = by.algebra();
  std::vector<Element> reps;
  for (const auto& x : a.enumerate(window)) {
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](const Element& r) {
      return by.contains(a.implies(x, r)) && by.contains(a.implies(r, x));
    });
    if (!seen) reps.push_back(x);
  }
  return reps.size();
}

void named_outcomes(Outcome& o) {
  using Names = std::vector<std::string>;

  // PSpec(lex:2): catalog rule against window primality and window inclusion.
  auto l2 = parse_algebra("lex:2");
  const auto pspec = spectrum(l2, SpectrumKind::prime);
  o.require(pspec.names() == Names{"m{1}", "m{2}", "rad"}, "PSpec(lex:2) nodes");
  std::vector<Filter> window_primes;
  for (const auto& f : filter_catalog(l2))
    if (!f.is_whole() && is_prime_by_join(f, kWindow) && is_prime_by_arrow(f, kWindow)) window_primes.push_back(f);
  o.require(window_primes.size() == pspec.size() &&
                std::all_of(window_primes.begin(), window_primes.end(),
                            [&](const Filter& f) { return pspec.find(f.literal()).has_value(); }),
            "window primes of lex:2 differ from the catalog rule");
  const auto v = SpectrumPoset::from_relation({"l", "r", "top"}, {{0, 2}, {1, 2}});
  o.require(order_iso(pspec, v) == std::vector<std::size_t>{0, 1, 2}, "PSpec(lex:2) is not the V-poset");
  std::vector<std::string> window_stem;
  for (const auto& p : window_primes)
    if (std::all_of(window_primes.begin(), window_primes.end(), [&](const Filter& q) {
          return subset_in_window(p, q, kWindow) || subset_in_window(q, p, kWindow);
        }))
      window_stem.push_back(p.literal());
  std::vector<std::string> exact_stem;
  for (const auto& s : stem(l2)) exact_stem.push_back(s.literal());
  o.require(exact_stem == Names{"rad"} && window_stem == exact_stem, "stem(lex:2)");
  const Filter n = conrad_filter(l2);
  const auto us = counits(*l2, kWindow);
  const auto closure = window_closure(*l2, us, kWindow);
  const std::unordered_set<Element, ElementHash> cset(closure.begin(), closure.end());
  const Filter n_window = match_catalog_filter(l2, [&](const Element& x) { return cset.count(x) > 0; }, kWindow);
  o.require(n.literal() == "rad" && n_window == n, "N(lex:2) = rad");

  // N of the Boolean square: catalog generation against the fixpoint closure.
  auto b2 = parse_algebra("product[chain:1,chain:1]");
  const auto bu = counits(*b2, 0);
  o.require(conrad_filter(b2).is_whole() && generate_filter_by_closure(b2, bu).is_whole(),
            "N(product[chain:1,chain:1]) = whole");

  // Localizations of lex:2: closed form against window congruence classes.
  for (const auto& [at, want] : {std::pair{"m{1}", "chang"}, std::pair{"rad", "lex:2"}}) {
    const Filter p = parse_filter(l2, at);
    const auto q = localize(p, kWindow);
    const auto target = parse_algebra(want);
    o.require(q.algebra()->name() == want, std::string("localize(lex:2, ") + at + ") = " + q.algebra()->name());
    o.require(window_classes(ell(p), kWindow) == target->enumerate(kWindow).size(),
              std::string("window class count of lex:2/ell(") + at + ")");
    auto err = validate_quotient(q, kWindow);
    o.require(!err, std::string("localize(lex:2, ") + at + "): " + err.value_or(""));
  }

  // Finite quotient: closed form against exhaustive congruence counting.
  auto p23 = parse_algebra("product[chain:2,chain:3]");
  const Filter pull = parse_filter(p23, "pull{1;one}");
  const auto q23 = quotient(pull);
  o.require(q23.algebra()->name() == "chain:2", "quotient(product[chain:2,chain:3], pull{1;one})");
  o.require(quotient_chain_bounds_by_congruence(pull) == std::vector<std::uint64_t>{2} &&
                quotient_chain_bounds_closed_form(q23) == std::vector<std::uint64_t>{2},
            "chain bounds of product[chain:2,chain:3]/pull{1;one}");
  o.summary = "5 outcomes, each computed two ways";
}

void universal(Outcome& o) {
  auto l2 = parse_algebra("lex:2");
  auto b2 = parse_algebra("product[chain:1,chain:1]");
  struct Scenario {
    AlgebraPtr a;
    const char* by;
    const char* at;
    bool h1, h2, c;
  };
  const Scenario scenarios[] = {
      {l2, "m{1}", "m{1}", true, true, true},
      {l2, "rad", "rad", true, true, true},
      {b2, "pull{2;one}", "pull{1;one}", false, true, false},
  };
  for (const auto& s : scenarios) {
    const auto r = check_universal(quotient(parse_filter(s.a, s.by)).projection(), parse_filter(s.a, s.at), kWindow);
    const std::string label = s.a->name() + "/" + s.by + " at " + s.at + ": " + r.describe();
    o.require(r.shell_inside_p == s.h1 && r.conrad_below_image == s.h2 && r.ell_inside_shell == s.c, label);
    o.require(!r.violation(), label);
  }
  const std::pair<AlgebraPtr, std::pair<const char*, const char*>> pairs[] = {
      {l2, {"m{1}", "m{2}"}}, {l2, {"m{2}", "m{1}"}}, {b2, {"pull{1;one}", "pull{2;one}"}},
      {b2, {"pull{2;one}", "pull{1;one}"}}};
  for (const auto& [a, pq] : pairs) {
    const Filter p = parse_filter(a, pq.first);
    const Filter q = parse_filter(a, pq.second);
    const Element w = incomparable_caveat_witness(p, q, kWindow);
    o.require(ell(p).contains(w) && !q.contains(w), a->name() + ": caveat witness " + a->format(w));
  }
  o.summary = "3 scenarios, 4 incomparable pairs";
}

void dual_generation(Outcome& o) {
  std::size_t compared = 0;
  auto compare = [&](const AlgebraPtr& a, const std::vector<Element>& s) {
    const Filter fast = generate_filter(a, s);
    const Filter slow = generate_filter_by_closure(a, s);
    o.require(fast == slow, a->name() + ": " + fast.literal() + " vs " + slow.literal());
    ++compared;
  };
  auto b2 = parse_algebra("product[chain:1,chain:1]");
  const auto bc = b2->enumerate(0);
  for (unsigned mask = 0; mask < (1U << bc.size()); ++mask) {
    std::vector<Element> s;
    for (std::size_t i = 0; i < bc.size(); ++i)
      if (mask >> i & 1U) s.push_back(bc[i]);
    compare(b2, s);
  }
  auto p = parse_algebra("product[chain:2,chain:3]");
  const auto pc = p->enumerate(0);
  std::mt19937_64 rng(12345);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < 1000; ++t) {
    std::vector<Element> s;
    for (const auto& x : pc)
      if (coin(rng)) s.push_back(x);
    compare(p, s);
  }
  // Every other finite catalog algebra has at most 12 elements: all subsets.
  for (const auto& a : catalog()) {
    if (!a->is_finite() || a->name() == b2->name() || a->name() == p->name()) continue;
    const auto c = a->enumerate(0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.size()); ++mask) {
      std::vector<Element> s;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (mask >> i & 1U) s.push_back(c[i]);
      compare(a, s);
    }
  }
  o.summary = std::to_string(compared) + " generating sets";
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str() + err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

void cli_criterion(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& text : catalog_entries()) {
    const auto r = cli({"verify", text});
    o.require(r.code == kExitPass, "verify " + text + " exited " + std::to_string(r.code));
  }
  const double verify_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(verify_seconds < 30.0, "verify took " + std::to_string(verify_seconds) + " s");

  // Gather every literal the tool emits, then check parse/format idempotence
  // through the tool's own parse verb.
  std::size_t literals = 0;
  auto round_trip = [&](const std::string& algebra, const char* flag, const std::string& literal,
                        const char* prefix) {
    std::vector<std::string> args{"parse", algebra};
    if (flag) {
      args.push_back(flag);
      args.push_back(literal);
    }
    const auto first = cli(args);
    const auto first_lines = lines_of(first.out);
    const std::string emitted = first_lines.empty() ? "" : first_lines.back();
    const std::string canonical = emitted.rfind(prefix, 0) == 0 ? emitted.substr(std::string(prefix).size()) : "";
    std::vector<std::string> again{"parse", algebra};
    if (flag) {
      again.push_back(flag);
      again.push_back(canonical);
    }
    const auto second = cli(again);
    o.require(first.code == kExitPass && second.code == kExitPass && first.out == second.out,
              "round trip of '" + literal + "' on " + algebra);
    ++literals;
  };
  const std::regex node(R"(^  node (.+)$)");
  const std::regex counit(R"(^  (\S+) witness (\S+)$)");
  const std::regex ell_line(R"(^ell\(.+\) = (.+)$)");
  for (const auto& entry : lines_of(cli({"catalog"}).out)) {
    round_trip(entry, nullptr, entry, "algebra ");
    const std::string name = parse_algebra(entry)->name();
    for (const auto& l : lines_of(cli({"pspec", entry}).out)) {
      std::smatch m;
      if (!std::regex_match(l, m, node)) continue;
      round_trip(name, "--filter", m[1], "filter ");
      const auto e = lines_of(cli({"ell", name, "--at", m[1]}).out);
      if (!e.empty() && std::regex_match(e.front(), m, ell_line)) round_trip(name, "--filter", m[1], "filter ");
    }
    for (const auto& l : lines_of(cli({"counits", name, "--window", "2"}).out)) {
      std::smatch m;
      if (!std::regex_match(l, m, counit)) continue;
      round_trip(name, "--element", m[1], "element ");
      round_trip(name, "--element", m[2], "element ");
    }
    const std::string n = lines_of(cli({"conrad", name}).out).front();
    round_trip(name, "--filter", n.substr(0, n.find(' ')), "filter ");
  }

  const auto dot = cli({"pspec", "lex:2", "--dot", "-"});
  std::size_t nodes = 0, edges = 0;
  for (const auto& l : lines_of(dot.out)) {
    if (std::regex_match(l, std::regex(R"(^  n\d+ \[label=".*"\];$)"))) ++nodes;
    if (std::regex_match(l, std::regex(R"(^  n\d+ -> n\d+;$)"))) ++edges;
  }
  o.require(nodes == 3 && edges == 2,
            "pspec(lex:2) DOT has " + std::to_string(nodes) + " nodes, " + std::to_string(edges) + " edges");

  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", verify_seconds);
  o.summary = "verify " + std::string(buf) + " s, " + std::to_string(literals) + " literals, DOT " +
              std::to_string(nodes) + " nodes/" + std::to_string(edges) + " edges";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "axioms on catalog algebras and suite quotients", 5.0, axioms},
      {2, "counit and Conrad filter suite", 10.0, section2},
      {3, "localization suite", 10.0, section3},
      {4, "named outcomes", 0.0, named_outcomes},
      {5, "universal property scenarios", 0.0, universal},
      {6, "generate_filter shortcut vs fixpoint closure", 0.0, dual_generation},
      {7, "command-line tool", 30.0, cli_criterion},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds)
      o.failures.push_back("runtime " + std::to_string(seconds) + " s over budget");
    const bool ok = o.failures.empty();
    all = all && ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << "CRITERION " << c.id << " " << (ok ? "PASS" : "FAIL") << " " << c.title << " [" << o.summary
              << "] (" << timing << ")\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
  }
  return all ? 0 : 1;
}
