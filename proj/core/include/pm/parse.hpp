// Reader for the ASCII surface syntax.
//
//   atom        := propvar | predname "(" indvar ")"
//   propvar     := [p-r][0-9]*
//   indvar      := [x-z][0-9]*
//   predname    := [A-Z][A-Za-z0-9]*
//   unary       := "~"
//   binary      := "v" | "=>" | "<=>"
//   quantifier  := "(" indvar ")" | "(E" indvar ")"
//   dots        := "."+
//
// Dots group by count. A run of n dots next to a binary connective gives it
// rank n (dots on both sides must agree); a run of n dots standing between
// two formulas is a conjunction of rank n. Within a group the operator of
// highest (rank, class) is the principal one, classes ordered
// conjunction < v < => < <=>. Ties group to the left except "=>", which
// groups to the right. A quantifier followed by n dots scopes over everything
// up to the next operator carrying n or more dots, or the end of its group;
// without dots it takes the next unary formula. Parentheses are always
// accepted.

#ifndef PM_PARSE_HPP
#define PM_PARSE_HPP

#include <string_view>

#include "pm/formula.hpp"

namespace pm {

// Throws SyntaxError.
Formula parse(std::string_view text);

}  // namespace pm

#endif  // PM_PARSE_HPP
