#pragma once

#include <string>

#include "tropgr/laurent.hpp"

namespace tropgr {

// Text grammar for Laurent polynomials in the pair variables:
//   poly   := ['-'] term { ('+' | '-') term }
//   term   := factor { '*' factor }
//   factor := 'u_<i>_<j>' ['^' ['-'] digits] | coefficient factor
// Coefficient factors follow the exact-arith grammar (numbers, t-powers,
// parenthesized expressions). Whitespace-insensitive; u_j_i aliases u_i_j.
// Throws SyntaxError with a byte offset.
LaurentPoly parse_poly(const std::string& text);

// Canonical rendering: terms in descending exponent-vector order, variables
// ascending within a term, unit coefficients elided; parses back exactly.
std::string print_poly(const LaurentPoly& f);

}  // namespace tropgr
