#pragma once

// Implication filters: lattice filters closed under powers, equivalently
// subsets containing 1 and closed under modus ponens.
//
// On finite algebras every filter is stored as an explicit membership bitmap
// over the canonical carrier order. Symbolic algebras use a closed catalog of
// descriptors whose membership is decidable in closed form:
//
//   One          {1}
//   Rad          the co-infinitesimals (1,v) of a Lex algebra
//   ZeroSet(S)   co-infinitesimals whose co-vector vanishes on S
//   Whole        the improper filter
//   Pullback     {x : x_i in F} on a product
//
// Descriptors are normalised on construction (ZeroSet of no co-ordinates is
// Rad, of all co-ordinates is One; a pullback of Whole is Whole), so
// structural equality coincides with set equality.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mvspec/algebra.hpp"

namespace mvspec {

class Filter {
 public:
  struct Explicit {
    std::vector<bool> members;  // indexed by carrier position
    friend bool operator==(const Explicit&, const Explicit&) = default;
  };
  struct One {
    friend bool operator==(const One&, const One&) = default;
  };
  struct Rad {
    friend bool operator==(const Rad&, const Rad&) = default;
  };
  struct ZeroSet {
    std::vector<std::size_t> coords;  // 0-based, sorted, proper non-empty subset
    friend bool operator==(const ZeroSet&, const ZeroSet&) = default;
  };
  struct Whole {
    friend bool operator==(const Whole&, const Whole&) = default;
  };
  struct Pullback {
    std::size_t component;  // 0-based
    std::shared_ptr<const Filter> inner;
    friend bool operator==(const Pullback& a, const Pullback& b) {
      return a.component == b.component && *a.inner == *b.inner;
    }
  };
  using Body = std::variant<Explicit, One, Rad, ZeroSet, Whole, Pullback>;

  static Filter one(AlgebraPtr a);
  static Filter whole(AlgebraPtr a);
  /// Lex/Chang algebras only.
  static Filter rad(AlgebraPtr a);
  /// Lex/Chang algebras only; coordinates are 0-based.
  static Filter zero_set(AlgebraPtr a, std::vector<std::size_t> coords);
  /// Products only; `inner` must be a filter of component `component`.
  static Filter pullback(AlgebraPtr a, std::size_t component, const Filter& inner);
  /// Finite algebras only. No closure is applied: the result is the set as
  /// given, which need not be an implication filter.
  static Filter from_members(AlgebraPtr a, std::span<const Element> members);
  static Filter from_bits(AlgebraPtr a, std::vector<bool> bits);
  /// The principal up-set [e, 1] of a finite algebra.
  static Filter up_set(AlgebraPtr a, const Element& e);

  const AlgebraPtr& owner() const noexcept { return owner_; }
  const Algebra& algebra() const noexcept { return *owner_; }
  const Body& body() const noexcept { return body_; }

  /// Exact membership. Throws ShapeError if x is not an element of the owner.
  bool contains(const Element& x) const;
  bool is_whole() const;
  bool is_one() const;
  /// Members of a filter on a finite algebra, in canonical order.
  std::vector<Element> members() const;

  /// Canonical literal (`one`, `whole`, `rad`, `m{1,2}`, `gen{e}`,
  /// `pull{i;F}`). Explicit sets that are not principal up-sets of an
  /// idempotent print as `{e1;e2;...}`.
  std::string literal() const;

  friend bool operator==(const Filter& a, const Filter& b);

 private:
  Filter(AlgebraPtr owner, Body body) : owner_(std::move(owner)), body_(std::move(body)) {}
  static Filter materialise(AlgebraPtr a, const std::function<bool(const Element&)>& pred);

  AlgebraPtr owner_;
  Body body_;
};

/// a is a subset of b (exact, closed form).
bool subset_of(const Filter& a, const Filter& b);
inline bool comparable(const Filter& a, const Filter& b) { return subset_of(a, b) || subset_of(b, a); }
/// a is a subset of b on every element of the window.
bool subset_in_window(const Filter& a, const Filter& b, std::uint64_t window);
/// Intersection; symbolic products only support pullbacks along one component.
Filter intersect(const Filter& a, const Filter& b);

inline bool filter_contains(const Filter& f, const Element& x) { return f.contains(x); }

/// Smallest implication filter containing `s` (finite algebras): the up-set of
/// the stabilised square powers of the meet of `s`. The empty set gives One.
Filter generate_filter(const AlgebraPtr& a, std::span<const Element> s);
/// Same filter computed as a fixpoint: close under otimes and upward until
/// nothing changes. Independent of generate_filter; used to cross-check it.
Filter generate_filter_by_closure(const AlgebraPtr& a, std::span<const Element> s);

/// Checks 1 in F, upward closure, meet closure and power closure on the scope,
/// and separately the modus ponens form. Throws InvariantViolation if the two
/// verdicts disagree.
bool is_implication_filter(const Filter& f, std::uint64_t window);

/// Elements with x (x) x = x (finite algebras), canonical order.
std::vector<Element> idempotents(const Algebra& a);
/// Every implication filter of a finite algebra, as up-sets of idempotents in
/// canonical order of the idempotent.
std::vector<Filter> all_filters(const AlgebraPtr& a);
/// all_filters for finite algebras; the descriptor catalog for symbolic ones.
std::vector<Filter> filter_catalog(const AlgebraPtr& a);

/// Prime: proper and x v y in F implies x in F or y in F. Exhaustive on finite
/// algebras; catalog rule on symbolic ones.
bool is_prime(const Filter& f);
bool is_prime_by_join(const Filter& f, std::uint64_t window);
bool is_prime_by_arrow(const Filter& f, std::uint64_t window);

std::vector<Filter> prime_filters(const AlgebraPtr& a);
std::vector<Filter> minimal_primes(const AlgebraPtr& a);
/// Minimal primes contained in the prime p.
std::vector<Filter> minimal_primes_below(const Filter& p);
/// Maximal proper filters.
std::vector<Filter> maximal_filters(const AlgebraPtr& a);

/// An inclusion-maximal filter not containing x (finite algebras, x != 1).
/// Ties go to the filter whose generating idempotent comes first.
Filter maximal_filter_avoiding(const AlgebraPtr& a, const Element& x);

/// Closure of `generators` inside the window: adds 1, products of members and
/// window elements above members until stable. Canonical order.
std::vector<Element> window_closure(const Algebra& a, std::span<const Element> generators,
                                    std::uint64_t window);

/// The catalog filter whose membership agrees with `pred` on the window.
/// Throws InvariantViolation when no catalog filter matches.
Filter match_catalog_filter(const AlgebraPtr& a, const std::function<bool(const Element&)>& pred,
                            std::uint64_t window);

}  // namespace mvspec
