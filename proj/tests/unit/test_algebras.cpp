#include <doctest.h>

#include "mvspec/axioms.hpp"
#include "mvspec/error.hpp"
#include "mvspec/literal.hpp"
#include "mvspec/verify.hpp"
#include "oracle.hpp"

using namespace mvspec;

TEST_SUITE("algebras") {
  TEST_CASE("build rejects trivial signatures") {
    CHECK_THROWS_AS(build(AlgebraExpr::chain(0)), SemanticError);
    CHECK_THROWS_AS(build(AlgebraExpr::lex(0)), SemanticError);
    CHECK_THROWS_AS(build(AlgebraExpr::product({})), SemanticError);
  }

  TEST_CASE("carrier sizes") {
    CHECK(build(AlgebraExpr::chain(1))->carrier_size() == 2u);
    CHECK(parse_algebra("product[chain:2,chain:3]")->carrier_size() == 12u);
    CHECK_FALSE(parse_algebra("chang")->is_finite());
    CHECK_FALSE(parse_algebra("product[chain:2,lex:2]")->is_finite());
  }

  TEST_CASE("chang is lex:1") {
    auto chang = build(AlgebraExpr::chang());
    auto lex1 = build(AlgebraExpr::lex(1));
    CHECK(chang->name() == "chang");
    CHECK(lex1->name() == "chang");
    CHECK(chang->shape() == lex1->shape());
    const auto scope = chang->enumerate(6);
    const auto scope1 = lex1->enumerate(6);
    REQUIRE(scope == scope1);
    for (const auto& x : scope) {
      CHECK(chang->neg(x) == lex1->neg(x));
      for (const auto& y : scope) {
        CHECK(chang->oplus(x, y) == lex1->oplus(x, y));
        CHECK(chang->implies(x, y) == lex1->implies(x, y));
        CHECK(chang->meet(x, y) == lex1->meet(x, y));
        CHECK(chang->leq(x, y) == lex1->leq(x, y));
      }
    }
  }

  TEST_CASE("lex negation flips the tag") {
    auto l2 = build(AlgebraExpr::lex(2));
    CHECK(l2->neg(l2->lex(1, {2, 0})) == l2->lex(0, {2, 0}));
  }

  TEST_CASE("lex oplus matches group arithmetic") {
    for (std::size_t k : {1u, 2u, 3u}) {
      auto a = build(AlgebraExpr::lex(k));
      const auto scope = a->enumerate(k == 3 ? 2 : 4);
      for (const auto& x : scope)
        for (const auto& y : scope) {
          const auto want = oracle::truncated_sum(x, y);
          const Element got = a->oplus(x, y);
          CHECK(std::vector<std::uint64_t>(got.cells().begin(), got.cells().end()) == want);
        }
    }
  }

  TEST_CASE("lex order matches the group order") {
    auto a = build(AlgebraExpr::lex(2));
    const auto scope = a->enumerate(3);
    for (const auto& x : scope)
      for (const auto& y : scope) {
        const auto gx = oracle::embed(x), gy = oracle::embed(y);
        const auto m = oracle::meet(gx, gy);
        const bool leq = m.top == gx.top && m.vec == gx.vec;
        CHECK(a->leq(x, y) == leq);
      }
  }

  TEST_CASE("product arithmetic commutes with projections") {
    auto a = parse_algebra("product[chain:2,chang,chain:1]");
    const auto scope = a->enumerate(2);
    for (const auto& x : scope) {
      for (std::size_t i = 0; i < a->arity(); ++i)
        CHECK(a->project(a->neg(x), i) == a->component(i)->neg(a->project(x, i)));
      for (const auto& y : scope)
        for (std::size_t i = 0; i < a->arity(); ++i)
          CHECK(a->project(a->oplus(x, y), i) == a->component(i)->oplus(a->project(x, i), a->project(y, i)));
    }
  }

  TEST_CASE("enumerate_window") {
    auto c2 = build(AlgebraExpr::chain(2));
    CHECK(enumerate_window(*c2, 99) == std::vector<Element>{c2->chain(0), c2->chain(1), c2->chain(2)});
    auto l1 = build(AlgebraExpr::lex(1));
    CHECK(enumerate_window(*l1, 1) ==
          std::vector<Element>{l1->lex(0, {0}), l1->lex(0, {1}), l1->lex(1, {0}), l1->lex(1, {1})});
    auto l2 = build(AlgebraExpr::lex(2));
    CHECK(enumerate_window(*l2, 2).size() == 18);
    auto mixed = parse_algebra("product[chain:2,lex:2]");
    const auto w = enumerate_window(*mixed, 1);
    CHECK(w.size() == 3 * 8);
    CHECK(std::is_sorted(w.begin(), w.end()));
  }

  TEST_CASE("carrier positions round-trip") {
    auto a = parse_algebra("product[chain:2,product[chain:1,chain:3]]");
    const auto carrier = a->enumerate(0);
    REQUIRE(carrier.size() == 24);
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      CHECK(a->index_of(carrier[i]) == i);
      CHECK(a->element_at(i) == carrier[i]);
    }
  }

  TEST_CASE("shape errors") {
    auto c2 = build(AlgebraExpr::chain(2));
    auto l2 = build(AlgebraExpr::lex(2));
    CHECK_THROWS_AS(c2->chain(3), ShapeError);
    CHECK_THROWS_AS(l2->lex(0, {1}), ShapeError);
    CHECK_THROWS_AS(c2->oplus(c2->one(), l2->one()), ShapeError);
  }

  TEST_CASE("check_mv_axioms on every catalog algebra") {
    for (const auto& text : catalog_entries()) {
      CAPTURE(text);
      const auto r = check_mv_axioms(*parse_algebra(text), 5);
      CHECK(r.passed);
    }
  }
}
