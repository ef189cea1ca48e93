#include <doctest.h>

#include "mvspec/axioms.hpp"
#include "mvspec/error.hpp"
#include "mvspec/literal.hpp"

using namespace mvspec;

namespace {

Element ev(const Algebra& a, Op op, std::initializer_list<Element> args) {
  return std::get<Element>(eval_op(a, op, std::span<const Element>(args.begin(), args.size())));
}

// Chain(n) with an injected fault in negation.
struct CorruptNeg {
  using value_type = Element;
  const Algebra& a;
  Element oplus(const Element& x, const Element& y) const { return a.oplus(x, y); }
  Element neg(const Element& x) const { return x; }
  Element zero() const { return a.zero(); }
  std::string format(const Element& x) const { return a.format(x); }
};

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("eval_op on chains") {
    auto c4 = build(AlgebraExpr::chain(4));
    CHECK(ev(*c4, Op::oplus, {c4->chain(3), c4->chain(2)}) == c4->chain(4));
    CHECK(ev(*c4, Op::neg, {c4->chain(1)}) == c4->chain(3));
    auto c2 = build(AlgebraExpr::chain(2));
    CHECK(ev(*c2, Op::implies, {c2->chain(2), c2->chain(1)}) == c2->chain(1));
    const Element args[] = {c2->chain(1), c2->chain(2)};
    CHECK(std::get<bool>(eval_op(*c2, Op::leq, args)));
  }

  TEST_CASE("eval_op on lex") {
    auto l2 = build(AlgebraExpr::lex(2));
    CHECK(ev(*l2, Op::oplus, {l2->lex(0, {1, 2}), l2->lex(1, {2, 1})}) == l2->lex(1, {1, 0}));
  }

  TEST_CASE("eval_op errors") {
    auto c2 = build(AlgebraExpr::chain(2));
    auto c3 = build(AlgebraExpr::chain(3));
    const Element wrong[] = {c3->chain(3), c3->chain(1)};
    CHECK_THROWS_AS(eval_op(*c2, Op::oplus, wrong), ShapeError);
    const Element one_arg[] = {c2->chain(1)};
    CHECK_THROWS_AS(eval_op(*c2, Op::oplus, one_arg), ShapeError);
  }

  TEST_CASE("derived operations agree with the chain formulas") {
    const std::uint64_t n = 5;
    auto c = build(AlgebraExpr::chain(n));
    for (std::uint64_t x = 0; x <= n; ++x)
      for (std::uint64_t y = 0; y <= n; ++y) {
        const Element a = c->chain(x), b = c->chain(y);
        CHECK(c->otimes(a, b) == c->chain(x + y > n ? x + y - n : 0));
        CHECK(c->implies(a, b) == c->chain(std::min(n, n - x + y)));
        CHECK(c->meet(a, b) == c->chain(std::min(x, y)));
        CHECK(c->join(a, b) == c->chain(std::max(x, y)));
        CHECK(c->leq(a, b) == (x <= y));
      }
  }

  TEST_CASE("check_mv_axioms passes on catalog algebras") {
    CHECK(check_mv_axioms(*build(AlgebraExpr::chain(3)), 1).passed);
    CHECK(check_mv_axioms(*build(AlgebraExpr::lex(2)), 4).passed);
    CHECK(check_mv_axioms(*parse_algebra("product[chain:2,chang]"), 3).passed);
    CHECK_THROWS_AS(check_mv_axioms(*build(AlgebraExpr::lex(2)), 0), PreconditionError);
  }

  TEST_CASE("corrupted negation is caught") {
    auto c3 = build(AlgebraExpr::chain(3));
    CorruptNeg s{*c3};
    const auto scope = c3->enumerate(0);
    const auto r = check_mv_axioms_on<CorruptNeg>(s, scope, scope);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.witness.empty());
    MESSAGE(r.describe());
  }

  TEST_CASE("order properties and linearity") {
    for (const char* text : {"chain:4", "chang", "lex:2", "product[chain:1,chain:2]", "product[chain:2,chang]"}) {
      auto a = parse_algebra(text);
      CAPTURE(text);
      CHECK(check_order_properties(*a, 3).passed);
    }
    CHECK(parse_algebra("chain:3")->is_linear());
    CHECK(parse_algebra("chang")->is_linear());
    CHECK(parse_algebra("lex:1")->is_linear());
    CHECK_FALSE(parse_algebra("lex:2")->is_linear());
    CHECK_FALSE(parse_algebra("product[chain:1,chain:1]")->is_linear());
  }

  TEST_CASE("prelinearity and De Morgan on lex:3") {
    auto a = parse_algebra("lex:3");
    const auto scope = a->enumerate(2);
    for (const auto& x : scope)
      for (const auto& y : scope) {
        CHECK(a->is_one(a->join(a->implies(x, y), a->implies(y, x))));
        CHECK(a->neg(a->join(x, y)) == a->meet(a->neg(x), a->neg(y)));
      }
  }
}
