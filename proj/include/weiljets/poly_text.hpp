#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "weiljets/polynomial.hpp"

namespace weiljets {

/// Default variable names: x, y, z when n <= 3, otherwise x1..xn.
std::vector<std::string> default_variable_names(std::size_t n);

/// Names a1..an followed by b1..bn, used for two-argument group laws.
std::vector<std::string> pair_variable_names(std::size_t n);

/// Parses text such as "3/2 x1^2 x3 - y" or "(x+y)^2". Accepted names are
/// `names` plus the indexed aliases x1..xn. Implicit multiplication by
/// juxtaposition is allowed; "p/q" between integer literals is a rational
/// literal. The result is exact: its degree bound equals its degree.
/// Throws ParseError carrying the character position.
Polynomial parse_polynomial(std::string_view text, std::size_t variables);
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

/// Terms in ascending GradedOrder with rational coefficients, e.g. "y - x^2".
std::string format_polynomial(const Polynomial& p);
std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names);

}  // namespace weiljets
