#include "mvspec/literal.hpp"

#include <cctype>
#include <limits>
#include <variant>

#include "mvspec/error.hpp"

namespace mvspec {

namespace {

struct ElemAst {
  struct Int {
    std::uint64_t value;
  };
  struct Tuple {
    std::vector<ElemAst> parts;
  };
  struct LexLit {
    int top;
    std::vector<Cell> vec;
  };
  std::size_t offset;
  std::variant<Int, Tuple, LexLit> node;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail({"end of input"});
  }

  AlgebraExpr algebra() {
    skip_ws();
    const std::string word = peek_word();
    if (word == "chain" || word == "lex") {
      pos_ += word.size();
      expect(':');
      const std::uint64_t n = integer();
      return word == "chain" ? AlgebraExpr::chain(n) : AlgebraExpr::lex(n);
    }
    if (word == "chang") {
      pos_ += word.size();
      return AlgebraExpr::chang();
    }
    if (word == "product") {
      pos_ += word.size();
      expect('[');
      std::vector<AlgebraExpr> kids;
      kids.push_back(algebra());
      while (accept(',')) kids.push_back(algebra());
      expect(']', {"','", "']'"});
      return AlgebraExpr::product(std::move(kids));
    }
    fail({"'chain'", "'chang'", "'lex'", "'product'"});
  }

  ElemAst elem() {
    skip_ws();
    const std::size_t at = pos_;
    if (at < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at])))
      return {at, ElemAst::Int{integer()}};
    if (accept('(')) {
      ElemAst::Tuple t;
      t.parts.push_back(elem());
      while (accept(',')) t.parts.push_back(elem());
      expect(')', {"','", "')'"});
      return {at, std::move(t)};
    }
    const std::string word = peek_word();
    if (word == "inf" || word == "coinf") {
      pos_ += word.size();
      expect('[');
      ElemAst::LexLit l{word == "coinf" ? 1 : 0, {}};
      l.vec.push_back(integer());
      while (accept(',')) l.vec.push_back(integer());
      expect(']', {"','", "']'"});
      return {at, std::move(l)};
    }
    fail({"INT", "'('", "'inf'", "'coinf'"});
  }

  Filter filter(const AlgebraPtr& a) {
    skip_ws();
    const std::size_t at = pos_;
    const std::string word = peek_word();
    if (word == "one" || word == "whole") {
      pos_ += word.size();
      return word == "one" ? Filter::one(a) : Filter::whole(a);
    }
    if (word == "rad") {
      pos_ += word.size();
      if (!a->lex_width()) semantic(at, "'rad' needs a lex/chang algebra, not " + a->name());
      return Filter::rad(a);
    }
    if (word == "m") {
      pos_ += word.size();
      expect('{');
      const auto k = a->lex_width();
      if (!k) semantic(at, "'m{..}' needs a lex/chang algebra, not " + a->name());
      std::vector<std::size_t> coords;
      do {
        const std::size_t i_at = skip_ws();
        const std::uint64_t i = integer();
        if (i == 0 || i > *k)
          semantic(i_at, "co-ordinate " + std::to_string(i) + " out of range 1.." + std::to_string(*k));
        coords.push_back(static_cast<std::size_t>(i - 1));
      } while (accept(','));
      expect('}', {"','", "'}'"});
      return Filter::zero_set(a, std::move(coords));
    }
    if (word == "gen") {
      pos_ += word.size();
      if (!a->is_finite()) throw UnsupportedError("'gen{..}' needs a finite algebra, not " + a->name());
      expect('{');
      std::vector<Element> gens;
      gens.push_back(bind(*a, elem()));
      while (accept(';')) gens.push_back(bind(*a, elem()));
      expect('}', {"';'", "'}'"});
      return generate_filter(a, gens);
    }
    if (word == "pull") {
      pos_ += word.size();
      expect('{');
      if (!a->is_product()) semantic(at, "'pull{..}' needs a product, not " + a->name());
      const std::size_t i_at = skip_ws();
      const std::uint64_t i = integer();
      if (i == 0 || i > a->arity())
        semantic(i_at, "component " + std::to_string(i) + " out of range 1.." + std::to_string(a->arity()));
      expect(';');
      Filter inner = filter(a->component(i - 1));
      expect('}');
      return Filter::pullback(a, static_cast<std::size_t>(i - 1), inner);
    }
    fail({"'one'", "'whole'", "'rad'", "'m'", "'gen'", "'pull'"});
  }

  Element bind(const Algebra& a, const ElemAst& ast) {
    if (auto n = a.chain_bound()) {
      const auto* i = std::get_if<ElemAst::Int>(&ast.node);
      if (!i) semantic(ast.offset, "expected an element of " + a.name());
      if (i->value > *n) semantic(ast.offset, std::to_string(i->value) + " out of range for " + a.name());
      return a.chain(i->value);
    }
    if (auto k = a.lex_width()) {
      const auto* l = std::get_if<ElemAst::LexLit>(&ast.node);
      if (!l) semantic(ast.offset, "expected an inf[..] or coinf[..] element of " + a.name());
      if (l->vec.size() != *k)
        semantic(ast.offset, "vector of width " + std::to_string(l->vec.size()) + " for " + a.name());
      return a.lex(l->top, l->vec);
    }
    const auto* t = std::get_if<ElemAst::Tuple>(&ast.node);
    if (!t) semantic(ast.offset, "expected a tuple element of " + a.name());
    if (t->parts.size() != a.arity())
      semantic(ast.offset, "tuple of " + std::to_string(t->parts.size()) + " parts for " + a.name());
    std::vector<Element> parts;
    for (std::size_t i = 0; i < t->parts.size(); ++i) parts.push_back(bind(*a.component(i), t->parts[i]));
    return a.tuple(parts);
  }

 private:
  std::size_t skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_;
  }

  std::string peek_word() const {
    std::size_t end = pos_;
    while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
    return std::string(text_.substr(pos_, end - pos_));
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) { expect(c, {std::string("'") + c + "'"}); }
  void expect(char c, std::vector<std::string> expected) {
    if (!accept(c)) fail(std::move(expected));
  }

  std::uint64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (max - d) / 10) semantic(start, "integer too large");
      value = value * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail({"INT"});
    return value;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string found;
    if (pos_ < text_.size()) {
      found = peek_word();
      if (found.empty()) found = std::string(1, text_[pos_]);
    }
    throw ParseError(pos_, std::move(expected), found);
  }

  [[noreturn]] static void semantic(std::size_t offset, const std::string& msg) {
    throw SemanticError("at offset " + std::to_string(offset) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraExpr parse_algebra_expr(std::string_view text) {
  Parser p(text);
  AlgebraExpr e = p.algebra();
  p.finish();
  return e;
}

AlgebraPtr parse_algebra(std::string_view text) { return build(parse_algebra_expr(text)); }

Element parse_element(const Algebra& a, std::string_view text) {
  Parser p(text);
  ElemAst ast = p.elem();
  p.finish();
  return p.bind(a, ast);
}

Filter parse_filter(const AlgebraPtr& a, std::string_view text) {
  Parser p(text);
  Filter f = p.filter(a);
  p.finish();
  return f;
}

}  // namespace mvspec
