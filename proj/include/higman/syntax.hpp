#pragma once

#include <string>
#include <string_view>

#include "higman/efun.hpp"
#include "higman/word.hpp"

namespace higman {

// expr := atom | un "(" expr ")" | bin "(" expr "," expr ")"
// atom := "Z" | "S" | "E" int
// un   := "rho" | "sigma" | "tau" | "theta" | "zeta" | "pi" | "omega" int
// bin  := "iota" | "upsilon"
efun::SetExpr parse_expr(std::string_view text);

/// "(a0,a1,...)" or the sparse form "{i:v,...}".
efun::FinSuppFn parse_fn(std::string_view text);

// word    := factor*                       juxtaposition is product
// factor  := "-" factor | primary post*    "-" inverts
// primary := ident | "1" | "(" word ")" | "[" word "," word "]"
// post    := "^" int | "^" primary | "^-" primary
// ident   := letters [ ["_"] ["-"] digits ]  a trailing index names a family member
// x^w is w^-1 x w, x^-w is w^-1 x^-1 w, [u,v] is u^-1 v^-1 u v.
Word parse_word(std::string_view text);

/// Runs of equal letters are written with exponents; a word of the form
/// u^-1 x^e u is written x^e^(u), or x^(u) / x^-(u) for e = +-1.
std::string format_word(const Word& w);

}  // namespace higman
