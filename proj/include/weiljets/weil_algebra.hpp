#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "weiljets/polynomial.hpp"
#include "weiljets/subspace.hpp"

namespace weiljets {

/// Ideal of R_n^W generated by `generators` together with every monomial of
/// degree W, as a subspace of the dense coefficient space of R_n^W.
Subspace saturate_ideal(std::size_t variables, unsigned window, const std::vector<Polynomial>& generators);

/// A local finite-dimensional quotient R_n^W / I with m^W inside I and
/// W = order + 1. Elements are coordinate vectors over basis(); basis()[0]
/// is always the unit. Copies share the same immutable tables.
class WeilAlgebra {
public:
    /// R_n^L modulo the ideal generated by `relations`.
    static WeilAlgebra quotient(std::size_t variables, const std::vector<Polynomial>& relations, unsigned L);
    /// R_m^l.
    static WeilAlgebra truncated(std::size_t variables, unsigned order);
    /// The reals, presented as R_1^0.
    static WeilAlgebra reals();
    /// From an ideal of R_n^W that is closed under multiplication and
    /// contains m^W. The window is lowered to order + 1 when possible.
    /// Throws EmptyQuotient when the ideal contains the unit.
    static WeilAlgebra from_ideal(std::size_t variables, unsigned window, const Subspace& ideal);

    std::size_t variables() const { return data_->variables; }
    unsigned window() const { return data_->window; }
    std::size_t dimension() const { return data_->basis.size(); }
    unsigned order() const { return data_->order; }
    std::size_t width() const;

    const MonomialBasis& ambient() const { return monomial_basis(data_->variables, data_->window); }
    /// Defining ideal inside the coefficient space of R_n^W.
    const Subspace& ideal() const { return data_->ideal; }
    const std::vector<MultiIndex>& basis() const { return data_->basis; }
    /// m_A^k in quotient coordinates; zero for k > order.
    const Subspace& maximal_power(unsigned k) const;
    /// dim m_A^k for k = 1 .. order + 1.
    std::vector<std::size_t> filtration() const;
    /// True when the defining ideal is exactly m^W, i.e. the algebra is R_n^order.
    bool is_truncated_ring() const;

    Vector zero() const { return Vector(dimension()); }
    Vector one() const;
    /// Class of the coordinate function x^i.
    Vector generator(std::size_t i) const;
    Vector reduce(const Polynomial& f) const;
    /// Class of the dense coefficient vector of an element of R_n^W.
    Vector reduce_dense(const Vector& ambient_coordinates) const;
    /// Representative sum a_alpha x^basis(alpha) with degree bound W.
    Polynomial lift(const Vector& a) const;

    /// Nonzero entries (gamma, c) of basis(alpha) * basis(beta).
    const std::vector<std::pair<std::size_t, Rational>>& product(std::size_t alpha, std::size_t beta) const;
    Vector multiply(const Vector& a, const Vector& b) const;
    /// Matrix of b -> a*b (rows index the output coordinate).
    std::vector<Vector> multiplication_matrix(const Vector& a) const;
    /// f(images) computed with the multiplication of this algebra.
    Vector evaluate(const Polynomial& f, const std::vector<Vector>& images) const;
    /// Rows of the ideal basis that are independent modulo m*I, i.e. a
    /// minimal generating system (includes the window-degree monomials).
    std::vector<Polynomial> minimal_generators() const;

    friend bool operator==(const WeilAlgebra& a, const WeilAlgebra& b);

private:
    struct Data {
        std::size_t variables = 0;
        unsigned window = 0;
        unsigned order = 0;
        Subspace ideal;
        std::vector<MultiIndex> basis;
        std::vector<std::size_t> basis_columns;
        std::vector<Vector> normal_form;  // per ambient monomial
        std::vector<std::vector<std::pair<std::size_t, Rational>>> products;
        std::vector<Subspace> powers;     // powers[k] = m_A^k, k = 0 .. order + 1
    };
    explicit WeilAlgebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    static std::shared_ptr<Data> build(std::size_t variables, unsigned window, const Subspace& ideal);

    std::shared_ptr<const Data> data_;
};

struct AlgebraInvariants {
    std::size_t dimension = 0;
    unsigned order = 0;
    std::size_t width = 0;
    std::vector<std::size_t> filtration;
    std::size_t derivation_dimension = 0;
    friend bool operator==(const AlgebraInvariants&, const AlgebraInvariants&) = default;
};

AlgebraInvariants invariants(const WeilAlgebra& a);

/// A tensor product together with the identification of the pair basis
/// a^alpha (x) b^beta, indexed alpha * dim B + beta, with quotient coordinates.
struct TensorProduct {
    WeilAlgebra algebra;
    std::vector<Vector> pair_to_quotient;
    std::vector<Vector> quotient_to_pair;
};

TensorProduct tensor_product(const WeilAlgebra& a, const WeilAlgebra& b);

/// Rows expressing sum_i [d_i g]_A * v_i = 0 for each g, on unknowns v in A^n
/// laid out as v_i = coordinates i * dim A .. (i + 1) * dim A - 1.
std::vector<Vector> leibniz_constraints(const WeilAlgebra& a, const std::vector<Polynomial>& generators);

/// Der(A, A) as the space of tuples (delta[x^1], ..., delta[x^n]) in A^n.
struct DerivationSpace {
    Subspace tuples;
    /// Per basis tuple: images delta(basis(alpha)) for every alpha.
    std::vector<std::vector<Vector>> images;
};

DerivationSpace derivation_space(const WeilAlgebra& a);

/// delta(basis(alpha)) for each alpha, for the derivation with the given tuple.
std::vector<Vector> derivation_images(const WeilAlgebra& a, const Vector& tuple);
Vector apply_images(const std::vector<Vector>& images, const Vector& element);

/// Morphism A -> B fixed by the images of the classes [x^i] of A.
class AlgebraMorphism {
public:
    /// Throws NotWellDefined when a relation of A maps to a nonzero element.
    AlgebraMorphism(WeilAlgebra source, WeilAlgebra target, std::vector<Vector> images);

    const WeilAlgebra& source() const { return source_; }
    const WeilAlgebra& target() const { return target_; }
    const std::vector<Vector>& images() const { return images_; }
    /// Column alpha holds the image of source basis alpha (rows: target coordinates).
    const std::vector<Vector>& matrix() const { return matrix_; }
    Vector apply(const Vector& a) const;
    bool is_epimorphism() const;
    bool is_isomorphism() const;
    /// this o first.
    AlgebraMorphism after(const AlgebraMorphism& first) const;

    /// First basis row of the source ideal whose image is nonzero, if any.
    static std::optional<Polynomial> witness(const WeilAlgebra& source, const WeilAlgebra& target,
                                             const std::vector<Vector>& images);

private:
    WeilAlgebra source_;
    WeilAlgebra target_;
    std::vector<Vector> images_;
    std::vector<Vector> matrix_;
};

/// For epimorphisms alpha, beta: R_n^l -> A, an automorphism g of R_n^l with
/// beta = alpha o g. The identity and the invertibility of the linear part
/// are checked before returning.
AlgebraMorphism factor_epimorphism(const AlgebraMorphism& alpha, const AlgebraMorphism& beta);

/// Ideal of A generated by the given elements.
Subspace generated_ideal(const WeilAlgebra& a, const std::vector<Vector>& generators);

struct StabilityReport {
    bool der_stable = false;
    /// g(I) = I, per supplied automorphism.
    std::vector<bool> automorphism_stable;
    /// Derivations of A/I induced by Der(A, A), as matrices on the quotient
    /// coordinates (free columns of I); filled when der_stable holds.
    std::vector<std::vector<Vector>> projected;
    std::size_t projected_dimension = 0;
    std::size_t quotient_dimension = 0;
    /// The derivation test only sees the identity component of Aut A.
    bool connected_component_gap = true;
};

/// Throws NotAnIdeal when I is not closed under multiplication.
StabilityReport ideal_stability(const WeilAlgebra& a, const Subspace& ideal,
                                const std::vector<AlgebraMorphism>& automorphisms = {});

}  // namespace weiljets
