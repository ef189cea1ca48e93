#pragma once

// MV-algebras from the built-in catalog: finite Lukasiewicz chains, Chang's
// algebra, the lexicographic perfect algebras Lex(k) and finite products of
// these.
//
// Elements are stored as a flat run of 64-bit cells laid out depth-first over
// the signature: a chain leaf takes one cell (its index), a Lex(k) leaf takes
// 1 + k cells (the top bit followed by the co-vector). The lexicographic order
// on cells is the canonical enumeration order used throughout the library.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace mvspec {

/// Signature tree of a catalog algebra.
struct AlgebraExpr {
  struct Chain {
    std::uint64_t n;
  };
  struct Chang {};
  struct Lex {
    std::size_t k;
  };
  struct Product {
    std::vector<AlgebraExpr> children;
  };

  std::variant<Chain, Chang, Lex, Product> node;

  static AlgebraExpr chain(std::uint64_t n) { return {Chain{n}}; }
  static AlgebraExpr chang() { return {Chang{}}; }
  static AlgebraExpr lex(std::size_t k) { return {Lex{k}}; }
  static AlgebraExpr product(std::vector<AlgebraExpr> children) {
    return {Product{std::move(children)}};
  }

  friend bool operator==(const AlgebraExpr& a, const AlgebraExpr& b);
};

bool operator==(const AlgebraExpr::Chain& a, const AlgebraExpr::Chain& b);
bool operator==(const AlgebraExpr::Chang& a, const AlgebraExpr::Chang& b);
bool operator==(const AlgebraExpr::Lex& a, const AlgebraExpr::Lex& b);
bool operator==(const AlgebraExpr::Product& a, const AlgebraExpr::Product& b);

/// Canonical text of a signature, e.g. `product[chain:2,chang]`. Lex(1) is
/// printed as `chang`.
std::string format_algebra(const AlgebraExpr& expr);

using Cell = std::uint64_t;
using Cells = boost::container::small_vector<Cell, 6>;

/// A value of some algebra. The shape tag is a fingerprint of the owning
/// signature; operations reject elements whose tag does not match.
class Element {
 public:
  Element() = default;
  Element(std::uint64_t shape, Cells cells) : shape_(shape), cells_(std::move(cells)) {}

  std::uint64_t shape() const noexcept { return shape_; }
  const Cells& cells() const noexcept { return cells_; }
  Cells& mutable_cells() noexcept { return cells_; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.shape_ == b.shape_ && a.cells_ == b.cells_;
  }
  /// Canonical enumeration order (only meaningful within one algebra).
  friend bool operator<(const Element& a, const Element& b) { return a.cells_ < b.cells_; }

 private:
  std::uint64_t shape_ = 0;
  Cells cells_;
};

struct ElementHash {
  std::size_t operator()(const Element& x) const noexcept;
};

enum class Op { oplus, neg, otimes, implies, meet, join, leq };

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Builds a catalog algebra. Throws SemanticError for n = 0, k = 0 or an empty
/// product. Lex(1) is normalised to Chang.
AlgebraPtr build(const AlgebraExpr& expr);

class Algebra {
 public:
  enum class LeafKind { chain, lex };
  struct Leaf {
    LeafKind kind;
    std::size_t offset;
    std::uint64_t param;  // n for chains, k for Lex
  };

  const AlgebraExpr& signature() const noexcept { return signature_; }
  std::string name() const { return format_algebra(signature_); }
  std::uint64_t shape() const noexcept { return shape_; }
  std::size_t width() const noexcept { return width_; }
  std::span<const Leaf> leaves() const noexcept { return leaves_; }

  bool is_finite() const noexcept { return carrier_size_.has_value(); }
  std::optional<std::size_t> carrier_size() const noexcept { return carrier_size_; }

  bool is_product() const noexcept { return !children_.empty(); }
  std::size_t arity() const noexcept { return children_.size(); }
  const AlgebraPtr& component(std::size_t i) const;
  /// Lex width k for a Lex/Chang algebra, nullopt otherwise.
  std::optional<std::size_t> lex_width() const;
  /// Chain bound n for a chain algebra, nullopt otherwise.
  std::optional<std::uint64_t> chain_bound() const;

  const Element& zero() const noexcept { return zero_; }
  const Element& one() const noexcept { return one_; }

  // Primitive operations.
  Element oplus(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;

  // Derived operations; always expressed through oplus and neg.
  Element otimes(const Element& x, const Element& y) const;
  Element implies(const Element& x, const Element& y) const;
  Element meet(const Element& x, const Element& y) const;
  Element join(const Element& x, const Element& y) const;
  bool leq(const Element& x, const Element& y) const;
  bool lt(const Element& x, const Element& y) const { return !(x == y) && leq(x, y); }
  bool is_one(const Element& x) const { return x == one_; }

  /// Throws ShapeError unless x is a valid element of this algebra.
  void validate(const Element& x) const;
  bool is_valid(const Element& x) const noexcept;

  /// True when every Lex co-ordinate of x is at most `bound`.
  bool in_window(const Element& x, std::uint64_t bound) const;
  /// Finite algebras: the whole carrier. Symbolic ones: every element whose Lex
  /// co-ordinates are all <= bound. Canonical order, no duplicates.
  std::vector<Element> enumerate(std::uint64_t bound) const;

  // Element construction.
  Element chain(std::uint64_t index) const;
  Element lex(int top, std::span<const Cell> vec) const;
  Element lex(int top, std::initializer_list<Cell> vec) const {
    return lex(top, std::span<const Cell>(vec.begin(), vec.size()));
  }
  Element tuple(std::span<const Element> parts) const;
  Element tuple(std::initializer_list<Element> parts) const {
    return tuple(std::span<const Element>(parts.begin(), parts.size()));
  }
  /// i-th component of a product element (0-based).
  Element project(const Element& x, std::size_t i) const;

  /// Position in the canonical carrier order (finite algebras only).
  std::size_t index_of(const Element& x) const;
  Element element_at(std::size_t index) const;

  std::string format(const Element& x) const;

  /// Totally ordered algebras: chains, Chang and products with one such factor.
  bool is_linear() const;

 private:
  friend AlgebraPtr build(const AlgebraExpr& expr);
  Algebra() = default;

  void oplus_into(const Cell* x, const Cell* y, Cell* out) const;
  void format_into(const Cell*& cursor, std::string& out) const;

  AlgebraExpr signature_;
  std::uint64_t shape_ = 0;
  std::size_t width_ = 0;
  std::vector<Leaf> leaves_;
  std::vector<AlgebraPtr> children_;
  std::vector<std::size_t> child_offsets_;
  std::optional<std::size_t> carrier_size_;
  Element zero_;
  Element one_;
};

/// Result of eval_op: an element, or a truth value for `leq`.
using OpResult = std::variant<Element, bool>;

/// Evaluates op on one (neg) or two arguments. Throws ShapeError on arity or
/// signature mismatch.
OpResult eval_op(const Algebra& a, Op op, std::span<const Element> args);

/// Deterministic window enumeration; see Algebra::enumerate.
inline std::vector<Element> enumerate_window(const Algebra& a, std::uint64_t bound) {
  return a.enumerate(bound);
}

}  // namespace mvspec

template <>
struct std::hash<mvspec::Element> : mvspec::ElementHash {};
