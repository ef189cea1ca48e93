#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mvspec/algebra.hpp"

namespace mvspec {

/// Outcome of an axiom or order check. On failure `law` names the first law
/// that failed and `witness` holds the offending elements in canonical text.
struct AxiomReport {
  bool passed = true;
  std::string law;
  std::vector<std::string> witness;
  std::size_t scope_size = 0;
  std::size_t ternary_scope_size = 0;

  std::string describe() const;
};

/// Triples above this count are not enumerated; ternary laws then run on a
/// smaller window (symbolic) or an evenly spaced sample (finite).
inline constexpr std::size_t kTernaryBudget = std::size_t{1} << 22;

namespace detail {

template <class S>
using value_t = typename S::value_type;

template <class S>
AxiomReport fail(const S& s, std::string law, std::initializer_list<value_t<S>> xs) {
  AxiomReport r;
  r.passed = false;
  r.law = std::move(law);
  for (const auto& x : xs) r.witness.push_back(s.format(x));
  return r;
}

}  // namespace detail

/// Checks the MV-algebra axioms on any structure exposing `value_type`,
/// `oplus`, `neg`, `zero` and `format`. Derived operations are recomputed here
/// from oplus and neg, so a corrupted primitive cannot hide behind them.
///
/// Laws, in the order they are tried: unit, involution, absorption,
/// commutativity, the x/y symmetry law, prelinearity, associativity. Each law
/// scans its scope in the given element order and stops at the first failure.
template <class S>
AxiomReport check_mv_axioms_on(const S& s, std::span<const detail::value_t<S>> scope,
                               std::span<const detail::value_t<S>> ternary_scope) {
  using V = detail::value_t<S>;
  const V zero = s.zero();
  const V one = s.neg(zero);
  auto implies = [&](const V& x, const V& y) { return s.oplus(s.neg(x), y); };
  auto join = [&](const V& x, const V& y) { return implies(implies(x, y), y); };

  for (const auto& x : scope) {
    if (!(s.oplus(x, zero) == x)) return detail::fail(s, "unit: x+0 = x", {x});
  }
  for (const auto& x : scope) {
    if (!(s.neg(s.neg(x)) == x)) return detail::fail(s, "involution: --x = x", {x});
  }
  for (const auto& x : scope) {
    if (!(s.oplus(x, one) == one)) return detail::fail(s, "absorption: x+(-0) = -0", {x});
  }
  for (const auto& x : scope) {
    for (const auto& y : scope) {
      if (!(s.oplus(x, y) == s.oplus(y, x))) return detail::fail(s, "commutativity", {x, y});
    }
  }
  for (const auto& x : scope) {
    for (const auto& y : scope) {
      V lhs = s.oplus(s.neg(s.oplus(s.neg(x), y)), y);
      V rhs = s.oplus(s.neg(s.oplus(s.neg(y), x)), x);
      if (!(lhs == rhs)) return detail::fail(s, "symmetry: -(-x+y)+y = -(-y+x)+x", {x, y});
    }
  }
  for (const auto& x : scope) {
    for (const auto& y : scope) {
      if (!(join(implies(x, y), implies(y, x)) == one))
        return detail::fail(s, "prelinearity: (x->y) v (y->x) = 1", {x, y});
    }
  }
  for (const auto& x : ternary_scope) {
    for (const auto& y : ternary_scope) {
      const V xy = s.oplus(x, y);
      for (const auto& z : ternary_scope) {
        if (!(s.oplus(xy, z) == s.oplus(x, s.oplus(y, z))))
          return detail::fail(s, "associativity", {x, y, z});
      }
    }
  }
  AxiomReport ok;
  ok.scope_size = scope.size();
  ok.ternary_scope_size = ternary_scope.size();
  return ok;
}

/// Adapter presenting a catalog algebra to check_mv_axioms_on.
struct AlgebraStructure {
  using value_type = Element;
  const Algebra& algebra;

  Element oplus(const Element& x, const Element& y) const { return algebra.oplus(x, y); }
  Element neg(const Element& x) const { return algebra.neg(x); }
  Element zero() const { return algebra.zero(); }
  std::string format(const Element& x) const { return algebra.format(x); }
};

/// Scope used for laws quantified over three variables.
std::vector<Element> ternary_scope(const Algebra& a, std::uint64_t window);

/// MV axioms on the whole carrier (finite) or on window `window` (symbolic).
/// Products additionally check each component on its own full window.
AxiomReport check_mv_axioms(const Algebra& a, std::uint64_t window);

/// Order-theoretic properties: <= is a partial order characterised by x->y = 1,
/// meet and join are the greatest lower / least upper bounds, De Morgan duality,
/// and linearity agrees with the signature (witness pair when not linear).
AxiomReport check_order_properties(const Algebra& a, std::uint64_t window);

}  // namespace mvspec
