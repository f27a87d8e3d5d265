#pragma once

#include <string_view>

#include "qweyl/ring_elem.hpp"

namespace qweyl {

/// Parses an element of Q(x) from text.
///
///   expr    := term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor | factor)*     juxtaposition multiplies
///   factor  := ('+' | '-') factor | power
///   power   := primary ('^' exponent)?
///   exponent:= ('+' | '-')* (number | '(' expr ')')     must be a rational constant
///   primary := number | 'x' | 'q' | '(' expr ')'
///
/// Numbers are integers or decimals ("0.25" is exactly 1/4). q means x^8.
/// Non-integer exponents are allowed on monomials x^k when the result stays
/// an integral power of x: q^(1/2) and q^(-3/4) work, while q^-3/4 reads
/// as (q^-3)/4.
/// Throws std::invalid_argument with the offending position on bad input,
/// including division by zero.
RingElem parse_expr(std::string_view text);

}  // namespace qweyl
