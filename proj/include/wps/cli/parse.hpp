#pragma once

#include "wps/rational.hpp"
#include "wps/scalar.hpp"
#include "wps/weights.hpp"
#include "wps/wpoly.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wps {

// Exponent vector -> rational coefficient, before a field is chosen.
using RawPolynomial = std::map<Monomial, Rational>;

// Names accepted for `count` variables: xK always, plus single-letter families
// (x,y / s,t / u,v for two; x,y,z / r,s,t / u,v,w for three; w,x,y,z for four;
// t or x for one). One expression may not mix families.
std::vector<std::vector<std::string>> variable_families(std::size_t count);

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | variable | '(' expr ')'
// No implicit multiplication. Errors are wps::ParseError with code ParseError
// or UnknownVariable and the byte offset.
RawPolynomial parse_raw(std::string_view text, std::size_t variable_count);

// Canonical polynomial over `field`; like terms combined, zeros dropped.
WPolynomial parse_polynomial(std::string_view text, const Weight& weight, const Field& field);

// Univariate integer polynomial in t (or x), ascending coefficients.
std::vector<BigInt> parse_integer_univariate(std::string_view text);

// Comma-separated positive integers of any length >= 1.
std::vector<std::int64_t> parse_positive_list(std::string_view text);

}  // namespace wps
