#pragma once

// Text forms of algebras, filters and elements.
//
//   algebra := 'chain' ':' INT | 'chang' | 'lex' ':' INT | 'product' '[' algebra (',' algebra)* ']'
//   filter  := 'one' | 'whole' | 'rad' | 'm' '{' INT (',' INT)* '}' | 'gen' '{' elem (';' elem)* '}'
//            | 'pull' '{' INT ';' filter '}'
//   elem    := INT | '(' elem (',' elem)* ')' | ('inf' | 'coinf') '[' INT (',' INT)* ']'
//
// Whitespace between tokens is ignored. Syntax errors raise ParseError with the
// byte offset and the set of tokens that would have been accepted there.
// Well-formed text that does not fit the algebra raises SemanticError; `gen`
// on a symbolic algebra raises UnsupportedError.

#include <string>
#include <string_view>

#include "mvspec/filter.hpp"

namespace mvspec {

AlgebraExpr parse_algebra_expr(std::string_view text);
/// parse_algebra_expr followed by build().
AlgebraPtr parse_algebra(std::string_view text);
Element parse_element(const Algebra& a, std::string_view text);
/// `m{..}` and `pull{i;..}` indices are 1-based.
Filter parse_filter(const AlgebraPtr& a, std::string_view text);

inline std::string format_element(const Algebra& a, const Element& x) { return a.format(x); }
inline std::string format_filter(const Filter& f) { return f.literal(); }

}  // namespace mvspec
