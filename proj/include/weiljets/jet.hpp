#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "weiljets/polynomial.hpp"
#include "weiljets/subspace.hpp"
#include "weiljets/weil_algebra.hpp"

namespace weiljets {

/// A jet at a rational point of R^n: an ideal of the local model, stored in
/// coordinates centred at the base point. The quotient algebra carries the
/// ideal itself (window order + 1).
class Jet {
public:
    Jet(Vector base_point, WeilAlgebra algebra, bool classical_flag = false);

    std::size_t ambient_dimension() const { return algebra_.variables(); }
    const Vector& base_point() const { return base_; }
    const WeilAlgebra& algebra() const { return algebra_; }
    const Subspace& ideal() const { return algebra_.ideal(); }
    unsigned order() const { return algebra_.order(); }
    unsigned window() const { return algebra_.window(); }
    std::size_t width() const { return algebra_.width(); }
    /// The quotient has the dimension of R_m^l for m = width, l = order,
    /// hence is isomorphic to it.
    bool is_classical() const;
    bool built_as_classical() const { return classical_flag_; }

    /// Minimal generators in centred coordinates, leaving out those of degree
    /// order + 1 (implied by the window).
    std::vector<Polynomial> generators() const;
    /// The same generators written in the original coordinates.
    std::vector<Polynomial> generators_at_point() const;
    /// Membership of a centred polynomial (terms of degree >= window are in p).
    bool contains(const Polynomial& f) const;
    /// The ideal inside the larger window R_n^w (w >= window()).
    Subspace ideal_in_window(unsigned w) const;

    friend bool operator==(const Jet& a, const Jet& b) {
        return a.base_ == b.base_ && a.algebra_ == b.algebra_;
    }

private:
    Vector base_;
    WeilAlgebra algebra_;
    bool classical_flag_ = false;
};

/// f(x + b), exactly.
Polynomial translate(const Polynomial& f, const Vector& b);
/// Value of a polynomial at a rational point.
Rational evaluate_at_point(const Polynomial& f, const Vector& point);

/// Jet generated by the generators (original coordinates) and m^(hint+1).
/// Throws EmptyQuotient, or HintTooSmall when a nonzero generator lies
/// entirely in m^(hint+1) at the base point.
Jet jet_from_ideal(std::size_t n, const Vector& base_point, const std::vector<Polynomial>& generators, unsigned order_hint);

/// Jet of the graph y^j = f^j(x): each entry is (index of y^j, f^j). The f^j
/// must not involve any graph variable.
Jet classical_jet(std::size_t n, const Vector& base_point,
                  const std::vector<std::pair<std::size_t, Polynomial>>& graph, unsigned order);

/// A jet from an ideal subspace of R_n^w in centred coordinates.
Jet jet_from_subspace(const Vector& base_point, std::size_t n, unsigned window, const Subspace& ideal);

/// {f in p : d_i f in p for all i}, computed in the window order + 2.
Jet hat_ideal(const Jet& p);

struct TangentModule {
    std::size_t ambient_dimension = 0;  // n * dim A
    Subspace relations;                 // Der(A, A) as tuples in A^n
    std::size_t dimension = 0;
};

TangentModule tangent_module(const Jet& p);

/// Class in A^n of the field sum a^i d/dx^i (centred coefficients).
Vector value_of_field(const Jet& p, const std::vector<Polynomial>& coefficients);

struct CotangentModule {
    std::size_t dimension = 0;
    /// Representatives of a basis of p / p-hat.
    std::vector<Polynomial> basis;
};

CotangentModule cotangent_module(const Jet& p);

/// d_p f evaluated on a tangent tuple: sum_i [d_i f] v_i in A.
/// Throws FNotInIdeal when f is not in p.
Vector differential(const Jet& p, const Polynomial& f, const Vector& tangent);

/// Fields sum a^i d/dx^i with a^i in R_n^order (layout i * dim + monomial)
/// such that D(p) lies in p.
Subspace jet_fields(const Jet& p);
/// True when every field of the subspace (same layout, any window at least
/// as large as needed) maps q into q.
bool fields_preserve(const Subspace& fields, std::size_t n, unsigned field_window, const Jet& q);

struct NormalForm {
    /// Original coordinates as functions of the adapted ones.
    Substitution sigma;
    /// Adapted coordinates as functions of the original ones.
    Substitution tau;
    std::vector<std::size_t> y_variables;
    std::vector<std::size_t> x_variables;
    /// Q^h in adapted coordinates, involving only x variables.
    std::vector<Polynomial> q_list;
    /// Basis of the transformed ideal intersected with R[x], degrees 2 .. order.
    std::vector<Polynomial> x_part;
    /// The ideal in adapted coordinates, window order + 1.
    Subspace transformed;
};

NormalForm normal_form(const Jet& p);

/// p + m^l + (Q^h) + (dQ^h/dx) pulled back to the original coordinates.
Jet derived_jet(const Jet& p);

/// Fields of the generating family, in adapted coordinates.
std::vector<std::vector<Polynomial>> cartan_family(const Jet& p, const NormalForm& nf);

/// p + (D f) for D in the generating family: an independent route to p'.
Jet cartan_generation_oracle(const Jet& p);

struct ContactData {
    explicit ContactData(Jet d) : derived(std::move(d)) {}

    Jet derived;
    std::vector<Vector> projection;  // pi: A -> A', rows index A'
    Subspace relations;              // Der(A, A) tuples in A^n
    Subspace derived_relations;      // Der(A', A') tuples in A'^n
    Subspace omega;                  // real-component functionals on A^n
    Subspace cartan;                 // annihilator of omega in A^n
    Subspace generated_cartan;       // A-span of family values plus relations
    std::size_t tangent_dimension = 0;
    std::size_t rank = 0;
    std::size_t cartan_dimension = 0;
    bool annihilator_identity = false;  // generated_cartan == cartan
    bool relations_projected = false;   // pi_*(Der A) inside Der A'
    bool kernel_in_cartan = false;      // ker pi_* inside cartan
};

ContactData contact_and_cartan(const Jet& p);

/// Componentwise pi on A^n -> A'^n.
std::vector<Vector> tangent_projection(const Jet& p, const Jet& q);

struct TaylorData {
    Jet derived;
    /// pi_*(C_p) + Der(A') inside A'^n.
    Subspace image;
    std::size_t image_dimension = 0;
    bool taylor_condition = false;
};

TaylorData taylor_map(const Jet& p);
TaylorData taylor_map(const Jet& p, const ContactData& contact);

/// Ideal inclusion p in q after embedding both in a common window.
bool ideal_contains(const Jet& q, const Jet& p);

/// phi(p) = {g : g o phi in p}, a jet at phi(base).
Jet pushforward(const Jet& p, const std::vector<Polynomial>& phi);

struct TangentMap {
    bool exists = false;
    bool regular = false;
    Jet image_jet;
    /// N * dim B rows, n * dim A columns; empty when !exists.
    std::vector<Vector> matrix;
};

TangentMap tangent_map(const Jet& p, const std::vector<Polynomial>& phi);

}  // namespace weiljets
