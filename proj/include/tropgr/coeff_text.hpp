#pragma once

#include <string>

#include "tropgr/puiseux.hpp"

namespace tropgr {

// Expression grammar over rationals and t: +, -, *, /, ^, parentheses.
// Exponents of t may be rational (parenthesized, e.g. t^(3/2)); exponents of
// anything else must be integers. Throws SyntaxError with a byte offset.
ValuedCoeff parse_coeff(const std::string& text);

// Parses a single coefficient factor (number, t with optional power, or a
// parenthesized expression with optional power) starting at pos; advances pos.
// Used by the Laurent polynomial grammar.
ValuedCoeff parse_coeff_factor(const std::string& text, std::size_t& pos);

// Canonical rendering; parse_coeff(print_coeff(c)) == c.
std::string print_coeff(const ValuedCoeff& c);
std::string print_puiseux(const PuiseuxPoly& p);

}  // namespace tropgr
