#include "mvspec/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <unordered_set>

#include "mvspec/axioms.hpp"
#include "mvspec/conrad.hpp"
#include "mvspec/error.hpp"
#include "mvspec/filter.hpp"
#include "mvspec/localize.hpp"
#include "mvspec/spectrum.hpp"

namespace mvspec {

namespace {

using Outcome = std::optional<std::string>;
constexpr Outcome kPass = std::nullopt;

// Window used for checks whose cost grows with a power of the window size.
constexpr std::uint64_t kClosureWindow = 2;

class Runner {
 public:
  Runner(std::string_view suite, std::vector<CheckResult>& out) : suite_(suite), out_(out) {}

  void operator()(std::string name, const std::function<Outcome()>& fn) {
    CheckResult r{std::string(suite_), std::move(name), true, {}};
    try {
      if (auto failure = fn()) {
        r.passed = false;
        r.detail = *failure;
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::string_view suite_;
  std::vector<CheckResult>& out_;
};

std::string pair_text(const Filter& p, const Filter& q) { return p.literal() + ", " + q.literal(); }

// Subsets of the carrier used to compare the two generation routes: all of
// them up to 12 elements, a fixed-seed sample beyond.
std::vector<std::vector<Element>> generator_sets(const Algebra& a) {
  const auto carrier = a.enumerate(0);
  std::vector<std::vector<Element>> out;
  const std::size_t n = carrier.size();
  auto pick = [&](std::uint64_t mask) {
    std::vector<Element> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.push_back(carrier[i]);
    return s;
  };
  if (n <= 12) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) out.push_back(pick(mask));
  } else {
    std::mt19937_64 rng(20261016);
    std::bernoulli_distribution coin(0.5);
    for (int t = 0; t < 1000; ++t) {
      std::vector<Element> s;
      for (const auto& x : carrier)
        if (coin(rng)) s.push_back(x);
      out.push_back(std::move(s));
    }
  }
  return out;
}

// The window closure of {x} on a symbolic algebra. Lex algebras: it matches a
// catalog filter. Products: it is the product of the component closures, each
// matching its own catalog (products of several proper filters are not
// catalog filters themselves).
Outcome generation_matches(const AlgebraPtr& a, const Element& x, std::uint64_t cw) {
  const Element gens[] = {x};
  const auto closure = window_closure(*a, gens, cw);
  std::unordered_set<Element, ElementHash> set(closure.begin(), closure.end());
  if (!a->is_product()) {
    match_catalog_filter(a, [&](const Element& y) { return set.count(y) > 0; }, cw);
    return kPass;
  }
  std::vector<std::unordered_set<Element, ElementHash>> parts;
  for (std::size_t i = 0; i < a->arity(); ++i) {
    const AlgebraPtr& c = a->component(i);
    const Element xi = a->project(x, i);
    if (!c->is_finite())
      if (auto err = generation_matches(c, xi, cw)) return err;
    const Element part_gens[] = {xi};
    const auto part = window_closure(*c, part_gens, cw);
    parts.emplace_back(part.begin(), part.end());
  }
  for (const auto& y : a->enumerate(cw)) {
    bool inside = true;
    for (std::size_t i = 0; i < a->arity() && inside; ++i) inside = parts[i].count(a->project(y, i)) > 0;
    if (inside != (set.count(y) > 0))
      return "closure of " + a->format(x) + " is not the product of component closures at " + a->format(y);
  }
  return kPass;
}

// ---------------------------------------------------------------------------

void axioms_suite(const AlgebraPtr& a, std::uint64_t w, Runner& run) {
  run("mv", [&]() -> Outcome {
    auto r = check_mv_axioms(*a, w);
    if (!r.passed) return r.describe();
    return kPass;
  });
  run("order", [&]() -> Outcome {
    auto r = check_order_properties(*a, w);
    if (!r.passed) return r.describe();
    return kPass;
  });
}

void filters_suite(const AlgebraPtr& a, std::uint64_t w, Runner& run) {
  const auto catalog = filter_catalog(a);

  run("implication", [&]() -> Outcome {
    for (const auto& f : catalog)
      if (!is_implication_filter(f, w)) return f.literal() + " is not an implication filter";
    return kPass;
  });

  run("generate_dual", [&]() -> Outcome {
    if (a->is_finite()) {
      for (const auto& s : generator_sets(*a)) {
        const Filter fast = generate_filter(a, s);
        const Filter slow = generate_filter_by_closure(a, s);
        if (!(fast == slow)) return "shortcut " + fast.literal() + " vs closure " + slow.literal();
      }
      return kPass;
    }
    const std::uint64_t cw = std::min(w, kClosureWindow);
    for (const auto& x : a->enumerate(cw))
      if (auto err = generation_matches(a, x, cw)) return err;
    return kPass;
  });

  if (a->is_finite()) {
    run("idempotent_upsets", [&]() -> Outcome {
      const auto ids = idempotents(*a);
      const auto all = all_filters(a);
      if (all.size() != ids.size()) return "idempotent and filter counts differ";
      for (const auto& f : all) {
        std::size_t hits = 0;
        for (const auto& e : ids)
          if (Filter::up_set(a, e) == f) ++hits;
        if (hits != 1) return f.literal() + " is the up-set of " + std::to_string(hits) + " idempotents";
      }
      return kPass;
    });
  }

  run("prime_criteria", [&]() -> Outcome {
    for (const auto& f : catalog) {
      const bool exact = is_prime(f);
      if (is_prime_by_join(f, w) != exact) return "join criterion disagrees on " + f.literal();
      if (is_prime_by_arrow(f, w) != exact) return "arrow criterion disagrees on " + f.literal();
    }
    return kPass;
  });

  if (a->is_finite()) {
    run("max_avoiding_prime", [&]() -> Outcome {
      for (const auto& x : a->enumerate(0)) {
        if (a->is_one(x)) continue;
        const Filter m = maximal_filter_avoiding(a, x);
        if (m.contains(x)) return m.literal() + " contains " + a->format(x);
        if (!is_prime(m)) return m.literal() + " avoiding " + a->format(x) + " is not prime";
      }
      return kPass;
    });
  }

  if (a->is_product()) {
    run("pullback", [&]() -> Outcome {
      std::vector<Filter> pulled_primes;
      for (std::size_t i = 0; i < a->arity(); ++i) {
        for (const auto& g : filter_catalog(a->component(i))) {
          const Filter f = Filter::pullback(a, i, g);
          if (!is_implication_filter(f, w)) return f.literal() + " is not an implication filter";
          if (is_prime(g)) pulled_primes.push_back(f);
        }
      }
      if (a->is_finite()) {
        for (const auto& p : prime_filters(a))
          if (std::find(pulled_primes.begin(), pulled_primes.end(), p) == pulled_primes.end())
            return p.literal() + " is not a pullback of a component prime";
      }
      return kPass;
    });
  }
}

void spectrum_suite(const AlgebraPtr& a, std::uint64_t w, Runner& run) {
  const auto pspec = spectrum(a, SpectrumKind::prime);
  const auto primes = prime_filters(a);

  run("root_system", [&]() -> Outcome {
    if (!pspec.is_partial_order()) return std::string("inclusion is not a partial order");
    if (!is_root_system(pspec)) return std::string("some up-set is not a chain");
    return kPass;
  });

  run("order_window", [&]() -> Outcome {
    for (const auto& p : primes)
      for (const auto& q : primes)
        if (subset_of(p, q) != subset_in_window(p, q, w))
          return "inclusion of " + pair_text(p, q) + " differs on the window";
    return kPass;
  });

  run("stem_conrad", [&]() -> Outcome {
    const auto st = stem(a);
    const Filter n = conrad_filter(a);
    if (st.empty() != n.is_whole()) return "stem empty = " + std::to_string(st.empty()) + " but N = " + n.literal();
    if (st.empty()) return kPass;
    for (const auto& s : st)
      if (!subset_of(n, s)) return "N = " + n.literal() + " is not below stem element " + s.literal();
    if (std::find(st.begin(), st.end(), n) == st.end()) return "N = " + n.literal() + " is not in the stem";
    return kPass;
  });

  run("minimal_consistency", [&]() -> Outcome {
    const auto mins = minimal_primes(a);
    for (const auto& m : mins) {
      if (std::find(primes.begin(), primes.end(), m) == primes.end()) return m.literal() + " is not prime";
      for (const auto& p : primes)
        if (subset_of(p, m) && !(p == m)) return m.literal() + " has the smaller prime " + p.literal();
    }
    for (const auto& p : primes) {
      auto below = minimal_primes_below(p);
      std::vector<Filter> expected;
      for (const auto& m : mins)
        if (subset_of(m, p)) expected.push_back(m);
      if (below != expected) return "minimal primes below " + p.literal() + " disagree";
      const auto local = spectrum(a, SpectrumKind::minimal, p);
      std::vector<Filter> comparable_mins;
      for (const auto& m : mins)
        if (comparable(m, p)) comparable_mins.push_back(m);
      if (local.filters() != comparable_mins) return "muS(" + p.literal() + ") disagrees";
      const auto at = spectrum(a, SpectrumKind::prime, p);
      for (const auto& m : local.filters())
        if (std::find(at.filters().begin(), at.filters().end(), m) == at.filters().end())
          return "muS(" + p.literal() + ") is not inside PSpec(" + p.literal() + ")";
    }
    return kPass;
  });

  if (a->is_finite()) {
    run("finite_antichain", [&]() -> Outcome {
      for (std::size_t i = 0; i < pspec.size(); ++i)
        for (std::size_t j = 0; j < pspec.size(); ++j)
          if (pspec.less(i, j)) return pspec.name(i) + " < " + pspec.name(j);
      return kPass;
    });
  }
}

void conrad_suite(const AlgebraPtr& a, std::uint64_t w, Runner& run) {
  const Filter n = conrad_filter(a);
  const auto primes = prime_filters(a);
  const auto catalog = filter_catalog(a);
  const auto us = counits(*a, w);

  run("window_generation", [&]() -> Outcome {
    const auto closure = window_closure(*a, us, w);
    std::vector<Element> expected;
    for (const auto& x : a->enumerate(w))
      if (n.contains(x)) expected.push_back(x);
    if (closure != expected) return "window closure of the counits differs from N = " + n.literal();
    return kPass;
  });

  run("n_prime_if_proper", [&]() -> Outcome {
    if (!n.is_whole() && !is_prime(n)) return "N = " + n.literal() + " is proper but not prime";
    return kPass;
  });

  run("comparable_with_n", [&]() -> Outcome {
    for (const auto& p : primes)
      if (!comparable(p, n)) return p.literal() + " is incomparable with N = " + n.literal();
    return kPass;
  });

  run("filters_above_n_chain", [&]() -> Outcome {
    std::vector<const Filter*> above;
    for (const auto& f : catalog)
      if (subset_of(n, f)) above.push_back(&f);
    for (const auto* f : above)
      for (const auto* g : above)
        if (!comparable(*f, *g)) return pair_text(*f, *g) + " contain N but are incomparable";
    return kPass;
  });

  run("n_minimal_iff_one", [&]() -> Outcome {
    const auto mins = minimal_primes(a);
    const bool minimal = std::find(mins.begin(), mins.end(), n) != mins.end();
    if (minimal != n.is_one()) return "N = " + n.literal() + " minimal = " + std::to_string(minimal);
    if (a->is_linear() && !n.is_one()) return "linearly ordered but N = " + n.literal();
    return kPass;
  });

  run("unique_max_contains_counits", [&]() -> Outcome {
    const auto m = unique_maximal_filter(a);
    if (!m) return kPass;
    if (n.is_whole() || !subset_of(n, *m)) return "N = " + n.literal() + " is not inside " + m->literal();
    for (const auto& u : us) {
      if (!m->contains(u)) return "counit " + a->format(u) + " outside " + m->literal();
      const auto wit = is_counit(*a, u);
      const Filter fb = join_complement_filter(a, wit->v, w);
      if (!fb.contains(u) || fb.is_whole() || !subset_of(fb, *m))
        return "F_b for b = " + a->format(wit->v) + " is " + fb.literal();
    }
    return kPass;
  });

  run("dominates_iff_counits", [&]() -> Outcome {
    for (const auto& p : primes) dominates_complement(p, w);
    return kPass;
  });

  run("counit_separator", [&]() -> Outcome {
    for (std::size_t i = 0; i < catalog.size(); ++i)
      for (std::size_t j = 0; j < catalog.size(); ++j)
        if (i != j && !comparable(catalog[i], catalog[j])) counit_separator(catalog[i], catalog[j], w);
    return kPass;
  });

  run("incomparable_prime", [&]() -> Outcome {
    for (const auto& p : primes) {
      if (std::all_of(us.begin(), us.end(), [&](const Element& u) { return p.contains(u); })) continue;
      incomparable_prime(p, w);
    }
    return kPass;
  });

  run("counit_witness", [&]() -> Outcome {
    for (const auto& x : a->enumerate(w)) {
      const auto closed = is_counit(*a, x);
      const auto brute = find_counit_in_window(*a, x, w);
      if (closed.has_value() != brute.has_value())
        return a->format(x) + ": closed form " + std::to_string(closed.has_value()) + ", window search " +
               std::to_string(brute.has_value());
      if (closed && (a->is_one(closed->v) || !a->is_one(a->join(x, closed->v))))
        return "bad witness " + a->format(closed->v) + " for " + a->format(x);
    }
    return kPass;
  });
}

void localize_suite(const AlgebraPtr& a, std::uint64_t w, Runner& run) {
  const auto primes = prime_filters(a);
  const auto mins = minimal_primes(a);
  std::vector<Filter> ells;
  for (const auto& p : primes) ells.push_back(ell(p));

  run("ell_below_p", [&]() -> Outcome {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (!subset_of(ells[i], primes[i])) return "ell(" + primes[i].literal() + ") = " + ells[i].literal();
      const bool minimal = std::find(mins.begin(), mins.end(), primes[i]) != mins.end();
      if ((ells[i] == primes[i]) != minimal)
        return "ell(" + primes[i].literal() + ") = " + ells[i].literal() + " but minimal = " + std::to_string(minimal);
    }
    return kPass;
  });

  run("ell_meet_of_minimal", [&]() -> Outcome {
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (!(ells[i] == ell_via_minimal(primes[i]))) return "ell(" + primes[i].literal() + ") disagrees";
    return kPass;
  });

  run("ell_window", [&]() -> Outcome {
    for (const auto& p : primes)
      if (!ell_matches_window_generation(p, w)) return "window generation of ell(" + p.literal() + ") differs";
    return kPass;
  });

  run("ell_in_minimal", [&]() -> Outcome {
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (const auto& m : minimal_primes_below(primes[i]))
        if (!subset_of(ells[i], m)) return "ell(" + primes[i].literal() + ") is not inside " + m.literal();
    return kPass;
  });

  run("minimal_avoids", [&]() -> Outcome {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto below = minimal_primes_below(primes[i]);
      for (const auto& x : a->enumerate(w)) {
        if (!primes[i].contains(x) || ells[i].contains(x)) continue;
        if (std::all_of(below.begin(), below.end(), [&](const Filter& m) { return m.contains(x); }))
          return "every minimal prime below " + primes[i].literal() + " contains " + a->format(x);
      }
    }
    return kPass;
  });

  run("monotone", [&]() -> Outcome {
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = 0; j < primes.size(); ++j)
        if (subset_of(primes[j], primes[i]) && !subset_of(ells[i], ells[j]))
          return "ell(" + primes[i].literal() + ") is not inside ell(" + primes[j].literal() + ")";
    return kPass;
  });

  run("quotients", [&]() -> Outcome {
    std::vector<Filter> by;
    auto add = [&](const Filter& f) {
      if (!f.is_whole() && std::find(by.begin(), by.end(), f) == by.end()) by.push_back(f);
    };
    for (std::size_t i = 0; i < primes.size(); ++i) {
      add(ells[i]);
      add(primes[i]);
    }
    add(conrad_filter(a));
    for (const auto& f : by) {
      const QuotientAlgebra q = quotient(f);
      if (auto err = validate_quotient(q, w)) return a->name() + "/" + f.literal() + ": " + *err;
      const Filter sh = shell(q.projection(), w);
      if (!(sh == f)) return "shell of the projection by " + f.literal() + " is " + sh.literal();
    }
    return kPass;
  });

  run("universal", [&]() -> Outcome {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const Morphism loc = localize(primes[i], w).projection();
      const auto r = check_universal(loc, primes[i], w);
      if (!r.shell_inside_p || !r.conrad_below_image || !r.ell_inside_shell)
        return "localization at " + primes[i].literal() + ": " + r.describe();
      for (const auto& q : primes) {
        const auto rq = check_universal(quotient(q).projection(), primes[i], w);
        if (rq.violation()) return "quotient by " + q.literal() + " at " + primes[i].literal() + ": " + rq.describe();
      }
    }
    return kPass;
  });

  run("incomparable_caveat", [&]() -> Outcome {
    for (const auto& p : primes)
      for (const auto& q : primes)
        if (!comparable(p, q)) incomparable_caveat_witness(p, q, w);
    return kPass;
  });

  run("comparability", [&]() -> Outcome {
    for (const auto& p : primes)
      for (const auto& f : primes) comparability_via_ell(p, f);
    return kPass;
  });

  run("spectrum_iso", [&]() -> Outcome {
    for (const auto& p : primes) spectrum_iso_check(p, w);
    return kPass;
  });

  run("connecting", [&]() -> Outcome {
    for (const auto& p : primes)
      for (const auto& q : primes)
        if (subset_of(q, p)) connecting_map(p, q, w);
    return kPass;
  });

  run("localized_counits", [&]() -> Outcome {
    for (const auto& p : primes) localize(p, w);
    return kPass;
  });
}

}  // namespace

std::string CheckResult::line() const {
  std::string out = "CHECK " + suite + "." + name + (passed ? " PASS" : " FAIL");
  if (!passed && !detail.empty()) out += " " + detail;
  return out;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::axioms: return "axioms";
    case Suite::filters: return "filters";
    case Suite::spectrum: return "spectrum";
    case Suite::conrad: return "conrad";
    case Suite::localize: return "localize";
  }
  return "unknown";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = {Suite::axioms, Suite::filters, Suite::spectrum, Suite::conrad,
                                            Suite::localize};
  return suites;
}

std::vector<CheckResult> verify_suite(Suite s, const AlgebraPtr& a, std::uint64_t window) {
  std::vector<CheckResult> out;
  Runner run(suite_name(s), out);
  try {
    switch (s) {
      case Suite::axioms: axioms_suite(a, window, run); break;
      case Suite::filters: filters_suite(a, window, run); break;
      case Suite::spectrum: spectrum_suite(a, window, run); break;
      case Suite::conrad: conrad_suite(a, window, run); break;
      case Suite::localize: localize_suite(a, window, run); break;
    }
  } catch (const std::exception& e) {
    out.push_back({std::string(suite_name(s)), "setup", false, e.what()});
  }
  return out;
}

std::vector<CheckResult> verify_all(const AlgebraPtr& a, std::uint64_t window) {
  std::vector<CheckResult> out;
  for (Suite s : all_suites()) {
    auto part = verify_suite(s, a, window);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

const std::vector<std::string>& catalog_entries() {
  static const std::vector<std::string> entries = {
      "chain:1", "chain:2", "chain:3", "chain:4", "chain:5", "product[chain:1,chain:1]", "product[chain:2,chain:3]",
      "chang", "lex:2", "lex:3", "product[chang,lex:2]",
  };
  return entries;
}

}  // namespace mvspec
