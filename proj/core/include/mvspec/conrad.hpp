#pragma once

// Counits and the Conrad filter.
//
// A counit is an element u < 1 for which some v < 1 has u v v = 1. The Conrad
// filter N is the implication filter generated by all counits. When N is
// proper it is the least element of the stem of the prime spectrum.

#include <cstdint>
#include <optional>
#include <vector>

#include "mvspec/filter.hpp"

namespace mvspec {

struct CounitWitness {
  Element u;
  Element v;
};

/// Witness that x is a counit, or nullopt. Finite algebras are searched
/// exhaustively (first witness in canonical order); Lex algebras and
/// symbolic products use the closed-form rule.
std::optional<CounitWitness> is_counit(const Algebra& a, const Element& x);

/// Brute-force witness search restricted to the window. Used to cross-check
/// the closed-form rule.
std::optional<CounitWitness> find_counit_in_window(const Algebra& a, const Element& x, std::uint64_t window);

/// All counits in scope, canonical order.
std::vector<Element> counits(const Algebra& a, std::uint64_t window);

/// The Conrad filter. Whole when it is improper.
Filter conrad_filter(const AlgebraPtr& a);

/// For a proper prime p: every member of p (in scope) dominates every
/// non-member. Throws InvariantViolation if this disagrees with "p contains
/// every counit in scope".
bool dominates_complement(const Filter& p, std::uint64_t window);

/// For incomparable filters p, q: a counit in q but not in p, built as y -> x
/// from the first x in q \ p and y in p \ q. Throws PreconditionError if p
/// and q are comparable in scope.
Element counit_separator(const Filter& p, const Filter& q, std::uint64_t window);

/// For a prime p missing some counit: a prime incomparable to p. Takes g not in
/// p and a member of p not above g, then the maximal filter avoiding g -> p.
Filter incomparable_prime(const Filter& p, std::uint64_t window);

/// {x : x v b = 1} for b < 1, checked to be an implication filter on the window.
Filter join_complement_filter(const AlgebraPtr& a, const Element& b, std::uint64_t window);

/// The maximum proper filter when there is exactly one maximal filter.
std::optional<Filter> unique_maximal_filter(const AlgebraPtr& a);

}  // namespace mvspec
