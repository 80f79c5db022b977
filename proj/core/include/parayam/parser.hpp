#pragma once

#include "parayam/expr.hpp"
#include "parayam/symbols.hpp"

#include <string_view>

namespace parayam {

// Parses the expression grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' exponent)?          exponent is an optionally
//   atom   := INTEGER                        negated integer literal,
//           | SYMBOL                         parenthesized or bare
//           | 'exp' '(' expr ')'
//           | '(' expr ')'
//
// Whitespace is insignificant.  Every symbol must already be declared in
// `table`; unknown names raise ParseError with the offending position.
ScalarExpr parse_expr(std::string_view text, const SymbolTable& table);

} // namespace parayam
