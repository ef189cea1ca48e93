#include <doctest.h>

#include <sstream>

#include "mvspec/cli.hpp"

using namespace mvspec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify lex:2") {
    const auto r = run({"verify", "lex:2", "--window", "5"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.rfind("CHECK axioms.mv PASS\n", 0) == 0);
  }

  TEST_CASE("conrad reports improper N") {
    const auto r = run({"conrad", "product[chain:1,chain:1]"});
    CHECK(r.code == kExitPass);
    CHECK(r.out == "whole (improper)\n");
    CHECK(run({"conrad", "lex:2"}).out == "rad\n");
  }

  TEST_CASE("localize prints the quotient and the isomorphism") {
    const auto r = run({"localize", "lex:2", "--at", "m{1}"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.rfind("quotient chang\n", 0) == 0);
    CHECK(r.out.find("m{1} -> one") != std::string::npos);
    CHECK(r.out.find("rad -> rad") != std::string::npos);
  }

  TEST_CASE("pspec dot") {
    const auto r = run({"pspec", "lex:2", "--dot", "-"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("n0 -> n2;") != std::string::npos);
    CHECK(r.out.find("n1 -> n2;") != std::string::npos);
  }

  TEST_CASE("usage and parse errors exit 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate", "lex:2"}).code == kExitUsage);
    CHECK(run({"ell", "lex:2"}).code == kExitUsage);
    const auto bad = run({"verify", "lex:"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("offset 4") != std::string::npos);
    CHECK(run({"parse", "lex:3", "--filter", "m{4}"}).code == kExitUsage);
    CHECK(run({"ell", "lex:2", "--at", "one"}).code == kExitUsage);
  }

  TEST_CASE("parse, counits, ell, catalog, json") {
    CHECK(run({"parse", "product[ chain:2 , lex:2 ]", "-e", "(1, coinf[1,0])"}).out ==
          "algebra product[chain:2,lex:2]\nelement (1,coinf[1,0])\n");
    const auto c = run({"counits", "lex:2", "--window", "1"});
    CHECK(c.out == "2 counit(s) of lex:2 with co-ordinates <= 1\n  coinf[0,1] witness coinf[1,0]\n"
                   "  coinf[1,0] witness coinf[0,1]\n");
    CHECK(run({"ell", "lex:2", "--at", "rad"}).out == "ell(rad) = one\n");
    CHECK(run({"catalog"}).out.find("product[chang,lex:2]\n") != std::string::npos);
    const auto j = run({"verify", "chain:2", "--format", "json"});
    CHECK(j.code == kExitPass);
    CHECK(j.out.find("\"suite\": \"axioms\"") != std::string::npos);
  }

  TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"verify", "product[chain:2,chain:3]"};
    CHECK(run(args).out == run(args).out);
  }
}
