#include <doctest.h>

#include "mvspec/conrad.hpp"
#include "mvspec/error.hpp"
#include "mvspec/literal.hpp"
#include "mvspec/spectrum.hpp"
#include "mvspec/verify.hpp"

using namespace mvspec;

namespace {

Filter f(const AlgebraPtr& a, const char* text) { return parse_filter(a, text); }
Element e(const AlgebraPtr& a, const char* text) { return parse_element(*a, text); }

}  // namespace

TEST_SUITE("conrad") {
  TEST_CASE("is_counit examples") {
    auto b2 = parse_algebra("product[chain:1,chain:1]");
    auto w = is_counit(*b2, e(b2, "(1,0)"));
    REQUIRE(w);
    CHECK(w->v == e(b2, "(0,1)"));
    auto l2 = parse_algebra("lex:2");
    auto w2 = is_counit(*l2, e(l2, "coinf[1,0]"));
    REQUIRE(w2);
    CHECK(w2->v == e(l2, "coinf[0,1]"));
    CHECK_FALSE(is_counit(*l2, e(l2, "coinf[1,1]")));
    CHECK_FALSE(is_counit(*l2, e(l2, "inf[0,3]")));
    CHECK_FALSE(is_counit(*l2, l2->one()));
  }

  TEST_CASE("closed-form counits agree with window search") {
    for (const char* text : {"chang", "lex:2", "lex:3", "product[chang,lex:2]", "product[chain:2,chang]"}) {
      CAPTURE(text);
      auto a = parse_algebra(text);
      for (const auto& x : a->enumerate(2)) {
        CAPTURE(a->format(x));
        CHECK(is_counit(*a, x).has_value() == find_counit_in_window(*a, x, 2).has_value());
      }
    }
  }

  TEST_CASE("counits examples") {
    for (std::uint64_t n = 1; n <= 5; ++n) CHECK(counits(*build(AlgebraExpr::chain(n)), 0).empty());
    auto b2 = parse_algebra("product[chain:1,chain:1]");
    CHECK(counits(*b2, 0) == std::vector<Element>{e(b2, "(0,1)"), e(b2, "(1,0)")});
    auto l2 = parse_algebra("lex:2");
    CHECK(counits(*l2, 2) == std::vector<Element>{e(l2, "coinf[0,1]"), e(l2, "coinf[0,2]"), e(l2, "coinf[1,0]"),
                                                  e(l2, "coinf[2,0]")});
  }

  TEST_CASE("conrad_filter examples") {
    CHECK(conrad_filter(parse_algebra("chain:4")).is_one());
    auto l2 = parse_algebra("lex:2");
    CHECK(conrad_filter(l2) == f(l2, "rad"));
    CHECK(conrad_filter(parse_algebra("chang")).is_one());
    CHECK(conrad_filter(parse_algebra("product[chain:1,chain:1]")).is_whole());
    CHECK(conrad_filter(parse_algebra("product[chang,lex:2]")).is_whole());
  }

  TEST_CASE("dominates_complement examples") {
    auto l2 = parse_algebra("lex:2");
    CHECK(dominates_complement(f(l2, "rad"), 5));
    CHECK_FALSE(dominates_complement(f(l2, "m{1}"), 5));
    auto b2 = parse_algebra("product[chain:1,chain:1]");
    CHECK_FALSE(dominates_complement(f(b2, "pull{1;one}"), 0));
  }

  TEST_CASE("counit_separator examples") {
    auto l2 = parse_algebra("lex:2");
    CHECK(counit_separator(f(l2, "m{1}"), f(l2, "m{2}"), 5) == e(l2, "coinf[1,0]"));
    auto b2 = parse_algebra("product[chain:1,chain:1]");
    CHECK(counit_separator(f(b2, "pull{1;one}"), f(b2, "pull{2;one}"), 0) == e(b2, "(0,1)"));
    CHECK(counit_separator(f(b2, "pull{2;one}"), f(b2, "pull{1;one}"), 0) == e(b2, "(1,0)"));
    CHECK_THROWS_AS(counit_separator(f(l2, "m{1}"), f(l2, "rad"), 5), PreconditionError);
  }

  TEST_CASE("incomparable_prime examples") {
    auto l2 = parse_algebra("lex:2");
    CHECK(incomparable_prime(f(l2, "m{1}"), 5) == f(l2, "m{2}"));
    CHECK_THROWS_AS(incomparable_prime(f(l2, "rad"), 5), PreconditionError);
    auto b2 = parse_algebra("product[chain:1,chain:1]");
    CHECK(incomparable_prime(f(b2, "pull{1;one}"), 0) == f(b2, "pull{2;one}"));
  }

  TEST_CASE("join_complement_filter examples") {
    auto b2 = parse_algebra("product[chain:1,chain:1]");
    CHECK(join_complement_filter(b2, e(b2, "(0,1)"), 0) == f(b2, "pull{1;one}"));
    auto l2 = parse_algebra("lex:2");
    CHECK(join_complement_filter(l2, e(l2, "coinf[0,1]"), 5) == f(l2, "m{2}"));
    auto c2 = parse_algebra("chain:2");
    CHECK(join_complement_filter(c2, c2->chain(1), 0).is_one());
    CHECK_THROWS_AS(join_complement_filter(c2, c2->one(), 0), PreconditionError);
  }

  TEST_CASE("N is comparable with every prime and filters above N form a chain") {
    for (const auto& text : catalog_entries()) {
      CAPTURE(text);
      auto a = parse_algebra(text);
      const Filter n = conrad_filter(a);
      for (const auto& p : prime_filters(a)) CHECK(comparable(n, p));
      std::vector<Filter> above;
      for (const auto& g : filter_catalog(a))
        if (subset_of(n, g)) above.push_back(g);
      for (const auto& x : above)
        for (const auto& y : above) CHECK(comparable(x, y));
      const auto mins = minimal_primes(a);
      CHECK((std::find(mins.begin(), mins.end(), n) != mins.end()) == n.is_one());
    }
  }

  TEST_CASE("unique maximal filter contains every counit") {
    for (const char* text : {"chang", "lex:2", "lex:3"}) {
      auto a = parse_algebra(text);
      auto m = unique_maximal_filter(a);
      REQUIRE(m);
      CHECK(*m == f(a, "rad"));
      for (const auto& u : counits(*a, 4)) CHECK(m->contains(u));
      CHECK(subset_of(conrad_filter(a), *m));
    }
    CHECK_FALSE(unique_maximal_filter(parse_algebra("product[chain:1,chain:1]")));
  }
}
