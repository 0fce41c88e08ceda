#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weiljets/jet.hpp"
#include "weiljets/polynomial.hpp"
#include "weiljets/weil_algebra.hpp"

namespace weiljets {

/// An A-point of R^n: the images of the coordinate functions in A.
class APoint {
public:
    APoint(WeilAlgebra algebra, std::vector<Vector> images);
    /// The point x -> base (constant images).
    static APoint constant(const WeilAlgebra& algebra, const Vector& base);

    const WeilAlgebra& algebra() const { return algebra_; }
    std::size_t ambient_dimension() const { return images_.size(); }
    const std::vector<Vector>& images() const { return images_; }
    /// Augmentations of the images.
    Vector base_point() const;

    friend bool operator==(const APoint& a, const APoint& b) {
        return a.algebra_ == b.algebra_ && a.images_ == b.images_;
    }

private:
    WeilAlgebra algebra_;
    std::vector<Vector> images_;
};

/// f(p^A); its coordinates are the real components f_alpha.
Vector evaluate(const Polynomial& f, const APoint& p);

struct Regularity {
    bool regular = false;
    Jet kernel;
};

Regularity regularity_and_kernel(const APoint& p);

/// Throws AlgebraMismatch when the algebras differ.
APoint cartesian_product(const APoint& p, const APoint& q);

/// The point with images g(x^i(p)) for an algebra morphism g: A -> B.
APoint transport(const APoint& p, const AlgebraMorphism& g);

/// Names of the real-component coordinates x^i_alpha, indexed i * dim A + alpha:
/// "x_0", "x_1", ..., "y_0", ...
std::vector<std::string> component_names(std::size_t n, std::size_t dim);

/// f evaluated at the generic A-point x^i = sum_alpha x^i_alpha a^alpha: one
/// polynomial per alpha, in n * dim A variables.
std::vector<Polynomial> real_components(const Polynomial& f, const WeilAlgebra& a);

/// The real components of every generator, generator by generator.
std::vector<Polynomial> prolong_ideal(const std::vector<Polynomial>& generators, const WeilAlgebra& a);

/// The coordinates x^i_alpha of an A-point, laid out i * dim A + alpha.
Vector component_coordinates(const APoint& p);

struct WeilIsoReport {
    bool equal = false;
    /// (f_alpha)_beta at alpha * dim B + beta.
    Vector two_stage;
    /// f_{alpha beta} over A (x) B in the pair basis.
    Vector one_stage;
};

/// `pair_images` holds, per variable, the coordinates of an (A (x) B)-point
/// in the pair basis a^alpha (x) b^beta (alpha * dim B + beta).
WeilIsoReport weil_iso_check(const Polynomial& f, const WeilAlgebra& a, const WeilAlgebra& b,
                             const std::vector<Vector>& pair_images);

/// A polynomial group law on R^n. The law is written in a1..an, b1..bn.
class GroupLaw {
public:
    /// Throws AxiomViolation unless Phi(e, q) = q, Phi(p, e) = p and
    /// Phi(p, inv p) = e hold as polynomial identities.
    GroupLaw(std::vector<Polynomial> law, Vector identity, std::vector<Polynomial> inverse);

    std::size_t dimension() const { return identity_.size(); }
    const std::vector<Polynomial>& law() const { return law_; }
    const Vector& identity() const { return identity_; }
    const std::vector<Polynomial>& inverse() const { return inverse_; }

    Vector multiply(const Vector& p, const Vector& q) const;
    Vector invert(const Vector& p) const;
    /// Jacobian of Phi in its first (0) or second (1) argument at (p, q).
    std::vector<Vector> jacobian(int argument, const Vector& p, const Vector& q) const;
    /// Jacobian of the inverse map at p.
    std::vector<Vector> inverse_jacobian(const Vector& p) const;
    /// d(x -> p x p^-1) at e.
    std::vector<Vector> adjoint(const Vector& p) const;

private:
    std::vector<Polynomial> law_;
    Vector identity_;
    std::vector<Polynomial> inverse_;
};

/// The Heisenberg law (a1+b1, a2+b2, a3+b3+a1 b2).
GroupLaw heisenberg_law();

/// The group G^A.
class ProlongedGroup {
public:
    ProlongedGroup(GroupLaw law, WeilAlgebra algebra) : law_(std::move(law)), algebra_(std::move(algebra)) {}

    const GroupLaw& law() const { return law_; }
    const WeilAlgebra& algebra() const { return algebra_; }

    APoint multiply(const APoint& p, const APoint& q) const;
    APoint identity() const;
    APoint inverse(const APoint& p) const;
    /// Associativity, two-sided identity and two-sided inverse, exactly.
    bool axioms_hold(const APoint& p, const APoint& q, const APoint& r) const;

private:
    GroupLaw law_;
    WeilAlgebra algebra_;
};

ProlongedGroup prolong_group(const GroupLaw& law, const WeilAlgebra& a);

struct TangentCorrespondence {
    bool equal = false;
    /// Real components of (D f)(p^A).
    Vector direct;
    /// The induced field applied to each real component f_alpha.
    Vector induced;
};

TangentCorrespondence tangent_correspondence_check(const Polynomial& f, const APoint& p,
                                                   const std::vector<Polynomial>& field);

}  // namespace weiljets
