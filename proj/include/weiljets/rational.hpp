#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace weiljets {

/// Exact scalar. GMP keeps every value in lowest terms with a positive
/// denominator after each arithmetic operation.
using Rational = mpq_class;

/// Dense coordinate vector.
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (optional surrounding blanks). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

inline bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

}  // namespace weiljets
