// Text forms of fields, field elements and polynomials.
//
// Polynomials print as terms `c*x^e` in decreasing degree joined by `+`,
// with c omitted when 1 and ^e omitted when e = 1. Coefficients in GF(p^n)
// print as polynomials in the generator `a`, parenthesized when they have
// more than one term.
#pragma once

#include <string>
#include <string_view>

#include "fieldunits/expr.hpp"
#include "fieldunits/field.hpp"
#include "fieldunits/poly.hpp"

namespace fieldunits {

/// "GF(p)", "GF(p^n)" or "GF(q)" for a prime power q.
Field parse_field(std::string_view text);

std::string format_elem(Field field, Field::Code c);
/// True when the element prints as a sum of several terms.
bool elem_needs_parens(Field field, Field::Code c);

FqElem parse_elem(Field field, std::string_view text);
Poly parse_poly(Field field, std::string_view text, const std::string& variable = "x");

/// Reads a nonnegative integer exponent.
std::uint64_t parse_natural_exponent(std::string_view raw);

}  // namespace fieldunits
