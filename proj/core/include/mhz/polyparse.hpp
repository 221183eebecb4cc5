#pragma once

#include <string>

#include "mhz/decomp.hpp"

namespace mhz {

/*
 * Parse the polynomial mini-grammar:
 *
 *   expr   := ['+'|'-'] term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := atom ('^' uint)?
 *   atom   := s<digit+> | number ['i'] | 'i' | '(' expr ')'
 *
 * Variables are s1..s8; coefficients are plain decimals (no scientific
 * notation) with an optional directly-attached imaginary unit, so complex
 * coefficients read like "(2+3i)*s1*s2^2 - 0.5i".  Term order of the result
 * follows first appearance in the text (the tableau layout is
 * order-sensitive).  arity = 0 infers arity from the highest variable used;
 * a positive arity fixes it and rejects higher-indexed variables.
 */
polynomial parse_polynomial(const std::string& text, int arity = 0);

}  // namespace mhz
