#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "weiljets/rational.hpp"

namespace weiljets {

/// Exponent tuple of a monomial, one entry per variable.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> exponents);
    static MultiIndex zero(std::size_t variables);
    static MultiIndex unit(std::size_t variables, std::size_t which);

    std::size_t size() const { return exps_.size(); }
    unsigned degree() const { return degree_; }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<unsigned>& exponents() const { return exps_; }

    MultiIndex operator+(const MultiIndex& other) const;
    /// True when every exponent of `other` is <= the matching one here.
    bool divisible_by(const MultiIndex& other) const;
    MultiIndex lowered(std::size_t which) const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<unsigned> exps_;
    unsigned degree_ = 0;
};

/// Graded monomial order: lower total degree first; within a degree, larger
/// exponent tuples (lexicographically) first, so x1 precedes x2 and x1^2
/// precedes x1 x2. This order fixes every dense coordinate layout.
struct GradedOrder {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All monomials of degree <= window in `variables` variables, listed in
/// GradedOrder. Instances are shared through monomial_basis().
class MonomialBasis {
public:
    MonomialBasis(std::size_t variables, unsigned window);

    std::size_t variables() const { return variables_; }
    unsigned window() const { return window_; }
    std::size_t size() const { return monomials_.size(); }
    const MultiIndex& operator[](std::size_t i) const { return monomials_[i]; }
    const std::vector<MultiIndex>& monomials() const { return monomials_; }
    /// Position of a monomial; the monomial must have degree <= window.
    std::size_t index_of(const MultiIndex& m) const;
    /// Number of monomials of degree < d (the start of degree block d).
    std::size_t degree_offset(unsigned d) const;

private:
    std::size_t variables_;
    unsigned window_;
    std::vector<MultiIndex> monomials_;
    std::map<std::vector<unsigned>, std::size_t> index_;
    std::vector<std::size_t> offsets_;
};

const MonomialBasis& monomial_basis(std::size_t variables, unsigned window);

/// Element of R[x1..xn]/(x)^(L+1): sparse map from monomial to nonzero
/// coefficient, every stored monomial of degree <= L.
class TruncatedPolynomial {
public:
    using Terms = std::map<MultiIndex, Rational, GradedOrder>;

    TruncatedPolynomial(std::size_t variables, unsigned degree_bound);

    static TruncatedPolynomial constant(std::size_t variables, unsigned degree_bound, const Rational& c);
    static TruncatedPolynomial variable(std::size_t variables, unsigned degree_bound, std::size_t which);
    static TruncatedPolynomial monomial(unsigned degree_bound, const MultiIndex& m, const Rational& c = 1);

    std::size_t variables() const { return variables_; }
    unsigned degree_bound() const { return bound_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const MultiIndex& m) const;
    Rational constant_term() const;
    /// Highest degree of a stored term; 0 for the zero polynomial.
    unsigned degree() const;
    /// Lowest degree of a stored term; 0 for the zero polynomial.
    unsigned low_degree() const;

    /// Adds c x^m; terms above the bound are dropped.
    void add_term(const MultiIndex& m, const Rational& c);

    TruncatedPolynomial truncated(unsigned bound) const;
    /// Same terms, new bound (drops terms above it when lowering).
    TruncatedPolynomial with_bound(unsigned bound) const;
    /// Homogeneous component of degree d.
    TruncatedPolynomial homogeneous_part(unsigned d) const;
    TruncatedPolynomial derivative(std::size_t which) const;
    /// Polynomial in variables + extra variables with the same terms.
    TruncatedPolynomial embedded(std::size_t total_variables, std::size_t offset) const;

    TruncatedPolynomial operator-() const;
    TruncatedPolynomial& operator+=(const TruncatedPolynomial& other);
    TruncatedPolynomial& operator-=(const TruncatedPolynomial& other);
    TruncatedPolynomial& operator*=(const Rational& c);
    friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a += b; }
    friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a -= b; }
    friend TruncatedPolynomial operator*(TruncatedPolynomial a, const Rational& c) { return a *= c; }
    friend TruncatedPolynomial operator*(const Rational& c, TruncatedPolynomial a) { return a *= c; }

    /// Equality of coefficient maps; degree bounds and variable counts must match.
    friend bool operator==(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

    Vector to_dense(const MonomialBasis& basis) const;
    static TruncatedPolynomial from_dense(const Vector& coords, const MonomialBasis& basis);

private:
    std::size_t variables_;
    unsigned bound_;
    Terms terms_;
};

using Polynomial = TruncatedPolynomial;

/// Product with every monomial of degree > L discarded. Inputs are read as
/// polynomials (terms above their own bounds are absent).
TruncatedPolynomial truncated_product(const TruncatedPolynomial& f, const TruncatedPolynomial& g, unsigned L);

/// Exact product with bound = sum of the factor bounds.
TruncatedPolynomial exact_product(const TruncatedPolynomial& f, const TruncatedPolynomial& g);

/// f(images[0], ..., images[n-1]) truncated at degree L. With
/// `coordinate_change` set, every image must have zero constant term.
TruncatedPolynomial truncated_substitute(const TruncatedPolynomial& f,
                                         const std::vector<TruncatedPolynomial>& images,
                                         unsigned L,
                                         bool coordinate_change = false);

/// A polynomial map given by one image polynomial per source variable.
using Substitution = std::vector<TruncatedPolynomial>;

Substitution identity_substitution(std::size_t variables, unsigned degree_bound);

/// (outer o inner)_i = outer_i(inner), truncated at L.
Substitution compose(const Substitution& outer, const Substitution& inner, unsigned L);

/// Inverse of a local coordinate change (zero constant terms, invertible
/// linear part) modulo degree L+1. Throws NotCoordinateChange.
Substitution inverse_substitution(const Substitution& sigma, unsigned L);

/// Linear-part matrix: row i holds the degree-1 coefficients of sigma[i].
std::vector<Vector> linear_part(const Substitution& sigma);

/// Inverse of a square rational matrix; throws NotCoordinateChange if singular.
std::vector<Vector> invert_matrix(std::vector<Vector> m);

}  // namespace weiljets
