#include "weiljets/subspace.hpp"

#include <algorithm>
#include <numeric>

#include "weiljets/error.hpp"

namespace weiljets {

EchelonBuilder::EchelonBuilder(std::size_t ambient_dimension)
    : ambient_(ambient_dimension), pivot_row_(ambient_dimension, -1) {}

bool EchelonBuilder::add(Vector row) {
    if (row.size() != ambient_) fail(ErrorKind::DimensionMismatch, "vector does not match the ambient dimension");
    std::size_t lead = ambient_;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (weiljets::is_zero(row[c])) continue;
        const long r = pivot_row_[c];
        if (r < 0) {
            if (lead == ambient_) lead = c;
            continue;
        }
        if (lead != ambient_) continue;  // row already has a new pivot before c
        const Rational factor = row[c];
        const Vector& base = rows_[static_cast<std::size_t>(r)];
        for (std::size_t k = c; k < ambient_; ++k)
            if (!weiljets::is_zero(base[k])) row[k] -= factor * base[k];
    }
    if (lead == ambient_) return false;
    // Entries after the new pivot that sit on existing pivots stay; finish()
    // clears them. Rows need zeros only before their own pivot.
    const Rational scale = 1 / row[lead];
    for (std::size_t k = lead; k < ambient_; ++k)
        if (!weiljets::is_zero(row[k])) row[k] *= scale;
    pivot_row_[lead] = static_cast<long>(rows_.size());
    pivots_.push_back(lead);
    rows_.push_back(std::move(row));
    return true;
}

Subspace EchelonBuilder::finish() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
    for (std::size_t i : order) {
        rows.push_back(rows_[i]);
        pivots.push_back(pivots_[i]);
    }
    for (std::size_t i = rows.size(); i-- > 0;) {
        const std::size_t p = pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            if (weiljets::is_zero(rows[k][p])) continue;
            const Rational factor = rows[k][p];
            for (std::size_t c = p; c < ambient_; ++c)
                if (!weiljets::is_zero(rows[i][c])) rows[k][c] -= factor * rows[i][c];
        }
    }
    // Rows are now reduced and pivot-sorted, so span() takes its fast path.
    return Subspace::span(rows, ambient_);
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dimension) : ambient_(ambient_dimension) {}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dimension) {
    Subspace s(ambient_dimension);
    if (vectors.empty()) return s;
    // Fast path: input already reduced and pivot-sorted (as produced by
    // EchelonBuilder::finish); otherwise echelonize first.
    std::vector<std::size_t> pivots;
    bool reduced = true;
    for (const auto& v : vectors) {
        if (v.size() != ambient_dimension) fail(ErrorKind::DimensionMismatch, "vector does not match the ambient dimension");
        std::size_t p = 0;
        while (p < ambient_dimension && weiljets::is_zero(v[p])) ++p;
        if (p == ambient_dimension || v[p] != 1 || (!pivots.empty() && p <= pivots.back())) {
            reduced = false;
            break;
        }
        pivots.push_back(p);
    }
    if (reduced) {
        for (std::size_t i = 0; i < vectors.size() && reduced; ++i)
            for (std::size_t j = 0; j < vectors.size(); ++j)
                if (j != i && !weiljets::is_zero(vectors[i][pivots[j]])) {
                    reduced = false;
                    break;
                }
    }
    if (reduced) {
        s.basis_ = vectors;
        s.pivots_ = std::move(pivots);
        return s;
    }
    EchelonBuilder builder(ambient_dimension);
    for (const auto& v : vectors) builder.add(v);
    return builder.finish();
}

Subspace Subspace::full(std::size_t ambient_dimension) {
    std::vector<std::size_t> all(ambient_dimension);
    std::iota(all.begin(), all.end(), 0);
    return coordinate(all, ambient_dimension);
}

Subspace Subspace::coordinate(const std::vector<std::size_t>& indices, std::size_t ambient_dimension) {
    std::vector<Vector> rows;
    for (std::size_t i : indices) {
        if (i >= ambient_dimension) fail(ErrorKind::DimensionMismatch, "coordinate index out of range");
        Vector v(ambient_dimension);
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    return span(rows, ambient_dimension);
}

std::vector<std::size_t> Subspace::free_columns() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            ++k;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_) fail(ErrorKind::DimensionMismatch, "vector does not match the ambient dimension");
    Vector r(v);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rational factor = r[pivots_[i]];
        if (weiljets::is_zero(factor)) continue;
        const Vector& row = basis_[i];
        for (std::size_t c = pivots_[i]; c < ambient_; ++c)
            if (!weiljets::is_zero(row[c])) r[c] -= factor * row[c];
    }
    return r;
}

bool Subspace::contains(const Vector& v) const { return weiljets::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) fail(ErrorKind::DimensionMismatch, "subspaces live in different ambient spaces");
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

Vector Subspace::coordinates_of(const Vector& v) const {
    if (!contains(v)) fail(ErrorKind::NotInSubspace, "vector is not in the subspace");
    Vector c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

Subspace canonical_basis(const std::vector<Vector>& vectors, std::size_t ambient_dimension) {
    return Subspace::span(vectors, ambient_dimension);
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dimension() != v.ambient_dimension())
        fail(ErrorKind::DimensionMismatch, "sum of subspaces in different ambient spaces");
    std::vector<Vector> rows(u.basis());
    rows.insert(rows.end(), v.basis().begin(), v.basis().end());
    return Subspace::span(rows, u.ambient_dimension());
}

Subspace intersection(const Subspace& u, const Subspace& v) {
    const std::size_t d = u.ambient_dimension();
    if (d != v.ambient_dimension()) fail(ErrorKind::DimensionMismatch, "intersection of subspaces in different ambient spaces");
    const std::size_t p = u.dimension();
    const std::size_t q = v.dimension();
    std::vector<Vector> rows(d, Vector(p + q));
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < p; ++i) rows[k][i] = u.basis()[i][k];
        for (std::size_t j = 0; j < q; ++j) rows[k][p + j] = -v.basis()[j][k];
    }
    const Subspace ker = nullspace(rows, p + q);
    std::vector<Vector> out;
    for (const auto& coeffs : ker.basis()) {
        Vector w(d);
        for (std::size_t i = 0; i < p; ++i) {
            if (weiljets::is_zero(coeffs[i])) continue;
            for (std::size_t k = 0; k < d; ++k) w[k] += coeffs[i] * u.basis()[i][k];
        }
        out.push_back(std::move(w));
    }
    return Subspace::span(out, d);
}

std::size_t quotient_dimension(const Subspace& u, const Subspace& v) {
    if (!u.contains(v)) fail(ErrorKind::NotInSubspace, "quotient_dimension needs V inside U");
    return u.dimension() - v.dimension();
}

Subspace nullspace(const std::vector<Vector>& rows, std::size_t columns) {
    EchelonBuilder builder(columns);
    for (const auto& r : rows) builder.add(r);
    const Subspace rref = builder.finish();
    std::vector<Vector> out;
    for (std::size_t f : rref.free_columns()) {
        Vector v(columns);
        v[f] = 1;
        for (std::size_t i = 0; i < rref.dimension(); ++i) v[rref.pivots()[i]] = -rref.basis()[i][f];
        out.push_back(std::move(v));
    }
    return Subspace::span(out, columns);
}

Vector apply(const std::vector<Vector>& m, const Vector& v) {
    Vector out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
    return out;
}

Subspace image(const std::vector<Vector>& matrix, const Subspace& domain, std::size_t target_dimension) {
    if (matrix.size() != target_dimension) fail(ErrorKind::DimensionMismatch, "matrix rows do not match the target dimension");
    std::vector<Vector> out;
    for (const auto& v : domain.basis()) out.push_back(apply(matrix, v));
    return Subspace::span(out, target_dimension);
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot product of vectors of different length");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!weiljets::is_zero(a[i]) && !weiljets::is_zero(b[i])) s += a[i] * b[i];
    return s;
}

std::optional<Vector> solve(const std::vector<Vector>& rows, const Vector& rhs, std::size_t columns) {
    if (rows.size() != rhs.size()) fail(ErrorKind::DimensionMismatch, "right-hand side does not match the row count");
    EchelonBuilder builder(columns + 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != columns) fail(ErrorKind::DimensionMismatch, "row does not match the column count");
        Vector aug(rows[i]);
        aug.push_back(rhs[i]);
        builder.add(std::move(aug));
    }
    const Subspace rref = builder.finish();
    Vector x(columns);
    for (std::size_t i = 0; i < rref.dimension(); ++i) {
        const std::size_t p = rref.pivots()[i];
        if (p == columns) return std::nullopt;
        x[p] = rref.basis()[i][columns];
    }
    return x;
}

}  // namespace weiljets
