#pragma once

// Localization at a prime filter.
//
// For a prime P, ell(P) is the implication filter generated by the arrows
// x -> p with p in P and x outside P. It equals the intersection of the
// minimal primes below P, and the quotient by it has a prime spectrum
// order-isomorphic to the primes comparable with P.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mvspec/axioms.hpp"
#include "mvspec/filter.hpp"
#include "mvspec/spectrum.hpp"

namespace mvspec {

class Morphism;

namespace detail {
struct QuotientData;
}

/// A quotient L/F, presented by an isomorphic catalog algebra together with
/// the projection onto it and a section picking canonical representatives.
class QuotientAlgebra {
 public:
  const AlgebraPtr& base() const;
  const Filter& by() const;
  /// Catalog algebra isomorphic to the quotient.
  const AlgebraPtr& algebra() const;

  /// Class of x, as an element of algebra().
  Element project(const Element& x) const;
  /// Canonical representative in base() of a class. Finite bases use the least
  /// class member in canonical order; symbolic ones pad with zero
  /// co-ordinates (Lex) or with 1 (untouched product components).
  Element lift(const Element& y) const;
  /// Finite bases: one representative per class, canonical order.
  std::vector<Element> representatives() const;

  Morphism projection() const;

 private:
  friend QuotientAlgebra quotient(const Filter& f);
  explicit QuotientAlgebra(std::shared_ptr<const detail::QuotientData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::QuotientData> data_;
};

/// L/F for a proper implication filter F. Finite algebras: exhaustive classes.
/// Symbolic: closed forms (Lex(k)/Rad = chain:1, Lex(k)/m{S} = Lex(|S|)
/// keeping the S co-ordinates, product/pull{i;G} = component_i/G, anything/one
/// = itself). Throws PreconditionError for Whole.
QuotientAlgebra quotient(const Filter& f);

/// Congruence, projection and section checks for a quotient on the window,
/// plus the MV axioms on the class structure. Returns a description of the
/// first failure, or nullopt.
std::optional<std::string> validate_quotient(const QuotientAlgebra& q, std::uint64_t window);

/// MV axioms on the quotient algebra and on the class structure of the base
/// (operations taken on representatives and reduced back to representatives).
AxiomReport check_quotient_axioms(const QuotientAlgebra& q, std::uint64_t window);

/// Sorted chain bounds of the finite quotient, obtained without the closed form:
/// count the classes of L/M for each prime M containing F.
std::vector<std::uint64_t> quotient_chain_bounds_by_congruence(const Filter& f);
/// Sorted chain bounds read off the signature of a finite quotient.
std::vector<std::uint64_t> quotient_chain_bounds_closed_form(const QuotientAlgebra& q);

class Morphism {
 public:
  struct FiniteTable {
    std::vector<Element> images;  // by source carrier position
  };
  struct QuotientMap {
    QuotientAlgebra quotient;
  };
  struct Composite {
    std::vector<Morphism> steps;
  };
  /// L/F -> L/G for F inside G: the F-class of x goes to its G-class.
  struct Induced {
    QuotientAlgebra from;
    QuotientAlgebra to;
  };
  using Body = std::variant<FiniteTable, QuotientMap, Composite, Induced>;

  static Morphism identity(AlgebraPtr a);
  static Morphism table(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images);
  static Morphism quotient_map(QuotientAlgebra q);
  static Morphism compose(std::vector<Morphism> steps);
  static Morphism induced(QuotientAlgebra from, QuotientAlgebra to);

  const AlgebraPtr& source() const noexcept { return source_; }
  const AlgebraPtr& target() const noexcept { return target_; }
  const Body& body() const noexcept { return body_; }

  Element apply(const Element& x) const;

 private:
  Morphism(AlgebraPtr source, AlgebraPtr target, Body body)
      : source_(std::move(source)), target_(std::move(target)), body_(std::move(body)) {}

  AlgebraPtr source_;
  AlgebraPtr target_;
  Body body_;
};

/// Preservation of oplus, neg and 0 on the source window; first failure or nullopt.
std::optional<std::string> check_homomorphism(const Morphism& f, std::uint64_t window);

/// sh(f) = {x : f(x) = 1}. For a quotient map this is exactly the quotienting
/// filter. Asserted to be an implication filter on the window.
Filter shell(const Morphism& f, std::uint64_t window);

/// ell(P) for a proper prime P. On finite algebras both the generator closure
/// and the minimal-prime intersection are computed and must agree.
Filter ell(const Filter& p);
/// Intersection of the minimal primes below P.
Filter ell_via_minimal(const Filter& p);
/// Window evidence for ell on symbolic algebras: the window closure of the
/// in-window generators equals ell(P) restricted to the window.
bool ell_matches_window_generation(const Filter& p, std::uint64_t window);

/// L/ell(P). Asserts that the image of P contains every counit of the
/// quotient in scope.
QuotientAlgebra localize(const Filter& p, std::uint64_t window);

/// L/ell(P) -> L/ell(Q) for primes Q inside P.
Morphism connecting_map(const Filter& p, const Filter& q, std::uint64_t window);

struct UniversalReport {
  bool shell_inside_p = false;         // sh(f) is contained in P
  bool conrad_below_image = false;     // N(target) inside the up-closure of f[P]
  bool ell_inside_shell = false;       // ell(P) is contained in sh(f)
  bool violation() const { return shell_inside_p && conrad_below_image && !ell_inside_shell; }
  std::string describe() const;
};

/// Evaluates both hypotheses and the conclusion of the universal property.
UniversalReport check_universal(const Morphism& f, const Filter& p, std::uint64_t window);

/// (ell(P) inside F, F comparable to P) for primes P and F; asserted equal.
std::pair<bool, bool> comparability_via_ell(const Filter& p, const Filter& f);

struct IsoReport {
  std::string quotient_name;
  SpectrumPoset domain;    // primes comparable to P
  SpectrumPoset codomain;  // primes of L/ell(P)
  std::vector<std::size_t> mapping;  // domain node -> codomain node via F -> F/ell(P)
  std::string describe() const;
};

/// Builds the correspondence F -> F/ell(P) and checks it is an order
/// isomorphism. Throws InvariantViolation when it is not.
IsoReport spectrum_iso_check(const Filter& p, std::uint64_t window);

/// For incomparable primes P and Q, q -> p lies in ell(P) but not in Q, where q
/// and p are the first elements of Q \ P and P \ Q in scope.
Element incomparable_caveat_witness(const Filter& p, const Filter& q, std::uint64_t window);

}  // namespace mvspec
