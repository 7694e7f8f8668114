#pragma once

#include "qdepth/ideal.hpp"

#include <string_view>

namespace qdepth {

// Parses ideal text over x1..xn:
//
//   ideal     := monomial (separator monomial)*
//   separator := "," | newline
//   monomial  := term ("*" term)* | "1"
//   term      := "x" INDEX ("^" EXPONENT)?
//
// Spaces, tabs and CR are insignificant; newlines separate like commas.
// Repeated variables multiply (x1*x1 == x1^2). INDEX and EXPONENT are >= 1.
// Empty segments between separators are skipped, so trailing newlines are
// harmless; an entirely empty input is the zero ideal.
//
// Throws ParseError (with a byte offset) on malformed text, out-of-range
// variable indices, or n < 1.
MonomialIdeal parse_ideal(std::string_view text, std::size_t n);

} // namespace qdepth
