#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "weiljets/rational.hpp"

namespace weiljets {

/// A linear subspace of Q^d held as its reduced row-echelon basis. Two
/// subspaces are equal exactly when their stored bases are identical.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dimension = 0);

    /// Reduced row-echelon basis of span(vectors). Throws DimensionMismatch.
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dimension);
    static Subspace full(std::size_t ambient_dimension);
    /// Span of the unit vectors e_i for the given indices.
    static Subspace coordinate(const std::vector<std::size_t>& indices, std::size_t ambient_dimension);

    std::size_t ambient_dimension() const { return ambient_; }
    std::size_t dimension() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_; }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// Coordinates not used as pivots; their unit vectors span a complement.
    std::vector<std::size_t> free_columns() const;

    /// v minus the combination of basis rows that clears every pivot entry.
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coefficients c with v = sum c_i basis_i; throws NotInSubspace.
    Vector coordinates_of(const Vector& v) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

Subspace canonical_basis(const std::vector<Vector>& vectors, std::size_t ambient_dimension);

Subspace sum(const Subspace& u, const Subspace& v);
/// Computed through the kernel of the stacked-basis map [U^T | -V^T].
Subspace intersection(const Subspace& u, const Subspace& v);
/// dim U - dim V; requires V inside U (throws NotInSubspace otherwise).
std::size_t quotient_dimension(const Subspace& u, const Subspace& v);

/// Kernel of the linear map x -> (row . x)_rows on Q^columns.
Subspace nullspace(const std::vector<Vector>& rows, std::size_t columns);

/// Image of each basis vector under a matrix acting on column vectors
/// (matrix rows index the target coordinates).
Subspace image(const std::vector<Vector>& matrix, const Subspace& domain, std::size_t target_dimension);

/// Matrix-vector product: (m v)_i = m_i . v.
Vector apply(const std::vector<Vector>& m, const Vector& v);

Rational dot(const Vector& a, const Vector& b);

/// One solution x of rows . x = rhs (free unknowns set to zero), or nothing
/// when the system is inconsistent.
std::optional<Vector> solve(const std::vector<Vector>& rows, const Vector& rhs, std::size_t columns);

/// Incremental row-echelon accumulator used to build large spans without
/// materializing every input row at once.
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t ambient_dimension);
    /// Returns true when the row enlarged the span.
    bool add(Vector row);
    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient_dimension() const { return ambient_; }
    /// Final reduced row-echelon subspace.
    Subspace finish() const;

private:
    std::size_t ambient_;
    std::vector<Vector> rows_;          // each row normalized with pivot entry 1
    std::vector<std::size_t> pivots_;   // unsorted, parallel to rows_
    std::vector<long> pivot_row_;       // column -> row index or -1
};

}  // namespace weiljets
