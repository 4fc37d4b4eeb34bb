#pragma once

#include <array>
#include <string>
#include <string_view>

#include "germ/poly.hpp"

namespace germ {

/// Parses a signed sum of monomials over the declared variable names.
///
///   poly     := ['+'|'-'] monomial (('+'|'-') monomial)*
///   monomial := factor ('*' factor)*
///   factor   := integer ['/' integer] | var ['^' integer]
///
/// Whitespace is insignificant. Like terms are combined and zero coefficients
/// dropped. Throws ParseError with the byte offset of the offending token.
template <std::size_t N>
Polynomial<N> parse_polynomial(std::string_view text, const std::array<std::string, N>& vars);

/// Bivariate shorthand; the first declared name carries the first exponent.
Poly2 parse_poly(std::string_view text, const std::array<std::string, 2>& vars = {"x", "y"});

} // namespace germ
