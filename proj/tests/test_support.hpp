#pragma once

// Shared helpers for the unit and acceptance suites: seeded random rationals,
// random polynomials, and a few brute-force oracles that deliberately avoid
// the library's own elimination code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "weiljets/poly_text.hpp"
#include "weiljets/polynomial.hpp"
#include "weiljets/rational.hpp"

namespace weiljets::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

    Rational rational(int span = 5, int max_den = 3) {
        Rational q(integer(-span, span), integer(1, max_den));
        q.canonicalize();
        return q;
    }

    Rational nonzero_rational(int span = 5, int max_den = 3) {
        for (;;) {
            Rational q = rational(span, max_den);
            if (q != 0) return q;
        }
    }

    Vector vector(std::size_t n, int span = 3) {
        Vector v(n);
        for (auto& x : v) x = integer(-span, span);
        return v;
    }

    /// Random polynomial with terms of degree in [lo, hi].
    Polynomial polynomial(std::size_t vars, unsigned lo, unsigned hi, int terms = 4) {
        Polynomial p(vars, hi);
        if (lo > hi) return p;
        const auto& basis = monomial_basis(vars, hi);
        const std::size_t first = basis.degree_offset(lo);
        for (int t = 0; t < terms; ++t) {
            const auto idx = static_cast<std::size_t>(integer(static_cast<int>(first), static_cast<int>(basis.size()) - 1));
            p.add_term(basis[idx], rational());
        }
        return p;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

inline Polynomial poly(std::string_view text, std::size_t vars) { return parse_polynomial(text, vars); }

/// Determinant by cofactor expansion (exponential; only for tiny matrices).
inline Rational cofactor_determinant(const std::vector<Vector>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Rational det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<Vector> minor;
        for (std::size_t i = 1; i < n; ++i) {
            Vector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        const Rational term = m[0][j] * cofactor_determinant(minor);
        det += (j % 2 == 0) ? term : Rational(-term);
    }
    return det;
}

/// Evaluates a polynomial at a rational point by direct term expansion.
inline Rational evaluate_at(const Polynomial& p, const Vector& point) {
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned k = 0; k < m[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

}  // namespace weiljets::testing
