#include "mvspec/axioms.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "mvspec/error.hpp"

namespace mvspec {

std::string AxiomReport::describe() const {
  if (passed) {
    return "pass (" + std::to_string(scope_size) + " elements, " +
           std::to_string(ternary_scope_size) + " in ternary scope)";
  }
  std::string out = "fail: " + law + " at";
  for (const auto& w : witness) out += " " + w;
  return out;
}

std::vector<Element> ternary_scope(const Algebra& a, std::uint64_t window) {
  auto cube_fits = [](std::size_t n) { return n <= 161 || n * n * n <= kTernaryBudget; };
  if (a.is_finite()) {
    auto all = a.enumerate(0);
    if (cube_fits(all.size())) return all;
    // Evenly spaced sample that always keeps both bounds of the carrier.
    const std::size_t keep = 161;
    std::vector<Element> sample;
    for (std::size_t i = 0; i < keep; ++i) sample.push_back(all[i * (all.size() - 1) / (keep - 1)]);
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
    return sample;
  }
  for (std::uint64_t b = window;; --b) {
    auto scope = a.enumerate(b);
    if (cube_fits(scope.size()) || b == 0) return scope;
  }
}

AxiomReport check_mv_axioms(const Algebra& a, std::uint64_t window) {
  if (window < 1) throw PreconditionError("axiom window must be >= 1");
  const auto scope = a.enumerate(window);
  const auto triples = ternary_scope(a, window);
  AlgebraStructure s{a};
  auto report = check_mv_axioms_on<AlgebraStructure>(s, scope, triples);
  if (!report.passed) return report;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    auto part = check_mv_axioms(*a.component(i), window);
    if (!part.passed) {
      part.law = "component " + std::to_string(i + 1) + ": " + part.law;
      return part;
    }
  }
  return report;
}

AxiomReport check_order_properties(const Algebra& a, std::uint64_t window) {
  const auto scope = a.enumerate(window);
  const auto triples = ternary_scope(a, window);
  auto fail = [&](std::string law, std::initializer_list<Element> xs) {
    AxiomReport r;
    r.passed = false;
    r.law = std::move(law);
    for (const auto& x : xs) r.witness.push_back(a.format(x));
    return r;
  };

  for (const auto& x : scope) {
    if (!a.leq(x, x)) return fail("reflexivity", {x});
    if (!a.leq(a.zero(), x) || !a.leq(x, a.one())) return fail("bounds", {x});
  }
  bool comparable_everywhere = true;
  std::optional<std::pair<Element, Element>> incomparable;
  for (const auto& x : scope) {
    for (const auto& y : scope) {
      const bool xy = a.leq(x, y);
      const bool yx = a.leq(y, x);
      if (xy && yx && !(x == y)) return fail("antisymmetry", {x, y});
      if (!xy && !yx) {
        comparable_everywhere = false;
        if (!incomparable) incomparable.emplace(x, y);
      }
      const Element m = a.meet(x, y);
      const Element j = a.join(x, y);
      if (!a.leq(m, x) || !a.leq(m, y)) return fail("meet is a lower bound", {x, y});
      if (!a.leq(x, j) || !a.leq(y, j)) return fail("join is an upper bound", {x, y});
      if ((m == x) != xy) return fail("x <= y iff x ^ y = x", {x, y});
      if (!(a.neg(j) == a.meet(a.neg(x), a.neg(y)))) return fail("De Morgan", {x, y});
    }
  }
  for (const auto& x : triples) {
    for (const auto& y : triples) {
      const bool xy = a.leq(x, y);
      const Element m = a.meet(x, y);
      const Element j = a.join(x, y);
      for (const auto& z : triples) {
        if (xy && a.leq(y, z) && !a.leq(x, z)) return fail("transitivity", {x, y, z});
        if (a.leq(z, x) && a.leq(z, y) && !a.leq(z, m)) return fail("meet is greatest", {x, y, z});
        if (a.leq(x, z) && a.leq(y, z) && !a.leq(j, z)) return fail("join is least", {x, y, z});
      }
    }
  }
  if (a.is_linear() != comparable_everywhere) {
    if (incomparable) return fail("linearity disagrees with signature", {incomparable->first, incomparable->second});
    return fail("linearity disagrees with signature", {});
  }
  AxiomReport ok;
  ok.scope_size = scope.size();
  ok.ternary_scope_size = triples.size();
  return ok;
}

}  // namespace mvspec
