#include "weiljets/a_points.hpp"

#include <algorithm>

#include "weiljets/error.hpp"
#include "weiljets/poly_text.hpp"

namespace weiljets {

namespace {

using Symbolic = std::vector<Polynomial>;  // coefficients over the basis of A

Symbolic symbolic_product(const WeilAlgebra& a, const Symbolic& p, const Symbolic& q, unsigned bound) {
    const std::size_t d = a.dimension();
    Symbolic out(d, Polynomial(p.front().variables(), bound));
    for (std::size_t x = 0; x < d; ++x) {
        if (p[x].is_zero()) continue;
        for (std::size_t y = 0; y < d; ++y) {
            if (q[y].is_zero()) continue;
            const Polynomial pq = truncated_product(p[x], q[y], bound);
            for (const auto& [g, c] : a.product(x, y)) out[g] += pq * c;
        }
    }
    return out;
}

unsigned max_degree(const std::vector<Polynomial>& ps) {
    unsigned d = 0;
    for (const auto& p : ps) d = std::max(d, p.degree());
    return d;
}

/// f(images) with no truncation loss.
Polynomial substitute_exact(const Polynomial& f, const std::vector<Polynomial>& images) {
    const unsigned bound = std::max(1u, f.degree() * std::max(1u, max_degree(images)));
    std::vector<Polynomial> imgs;
    for (const auto& p : images) imgs.push_back(p.with_bound(bound));
    return truncated_substitute(f, imgs, bound);
}

bool same_polynomial(const Polynomial& a, const Polynomial& b) {
    const unsigned bound = std::max(a.degree_bound(), b.degree_bound());
    return a.with_bound(bound) == b.with_bound(bound);
}

std::vector<Vector> matrix_product(const std::vector<Vector>& a, const std::vector<Vector>& b) {
    std::vector<Vector> out(a.size(), Vector(b.empty() ? 0 : b.front().size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (is_zero(a[i][k])) continue;
            for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

}  // namespace

APoint::APoint(WeilAlgebra algebra, std::vector<Vector> images) : algebra_(std::move(algebra)), images_(std::move(images)) {
    if (images_.empty()) fail(ErrorKind::VariableCountMismatch, "an A-point needs at least one coordinate");
    for (const auto& v : images_)
        if (v.size() != algebra_.dimension()) fail(ErrorKind::DimensionMismatch, "image does not match the algebra dimension");
}

APoint APoint::constant(const WeilAlgebra& algebra, const Vector& base) {
    std::vector<Vector> images;
    for (const auto& b : base) {
        Vector v = algebra.zero();
        v[0] = b;
        images.push_back(std::move(v));
    }
    return APoint(algebra, std::move(images));
}

Vector APoint::base_point() const {
    Vector b;
    for (const auto& v : images_) b.push_back(v[0]);
    return b;
}

Vector evaluate(const Polynomial& f, const APoint& p) {
    if (f.variables() != p.ambient_dimension()) fail(ErrorKind::VariableCountMismatch, "polynomial and point have different dimensions");
    return p.algebra().evaluate(f, p.images());
}

Regularity regularity_and_kernel(const APoint& p) {
    const WeilAlgebra& a = p.algebra();
    const std::size_t n = p.ambient_dimension();
    const Vector base = p.base_point();
    std::vector<Vector> centred;
    for (std::size_t i = 0; i < n; ++i) {
        Vector c = p.images()[i];
        c[0] -= base[i];
        centred.push_back(std::move(c));
    }
    const bool regular = sum(Subspace::span(centred, a.dimension()), a.maximal_power(2)).contains(a.maximal_power(1));

    const unsigned w = a.order() + 1;
    const MonomialBasis& mons = monomial_basis(n, w);
    std::vector<Vector> system(a.dimension(), Vector(mons.size()));
    for (std::size_t j = 0; j < mons.size(); ++j) {
        const Vector v = a.evaluate(Polynomial::monomial(w, mons[j]), centred);
        for (std::size_t r = 0; r < v.size(); ++r) system[r][j] = v[r];
    }
    Regularity out{regular, jet_from_subspace(base, n, w, nullspace(system, mons.size()))};
    if (regular) ensure(invariants(out.kernel.algebra()) == invariants(a), "a regular point has the invariants of A");
    return out;
}

APoint cartesian_product(const APoint& p, const APoint& q) {
    if (!(p.algebra() == q.algebra())) fail(ErrorKind::AlgebraMismatch, "cartesian product needs points of the same algebra");
    std::vector<Vector> images(p.images());
    images.insert(images.end(), q.images().begin(), q.images().end());
    return APoint(p.algebra(), std::move(images));
}

APoint transport(const APoint& p, const AlgebraMorphism& g) {
    if (!(p.algebra() == g.source())) fail(ErrorKind::AlgebraMismatch, "morphism does not start at the point's algebra");
    std::vector<Vector> images;
    for (const auto& v : p.images()) images.push_back(g.apply(v));
    return APoint(g.target(), std::move(images));
}

std::vector<std::string> component_names(std::size_t n, std::size_t dim) {
    std::vector<std::string> names;
    for (const auto& base : default_variable_names(n))
        for (std::size_t alpha = 0; alpha < dim; ++alpha) names.push_back(base + "_" + std::to_string(alpha));
    return names;
}

std::vector<Polynomial> real_components(const Polynomial& f, const WeilAlgebra& a) {
    const std::size_t n = f.variables();
    const std::size_t d = a.dimension();
    const std::size_t big = n * d;
    const unsigned bound = std::max(1u, f.degree());
    std::vector<std::vector<Symbolic>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        Symbolic one(d, Polynomial(big, bound));
        one[0] = Polynomial::constant(big, bound, 1);
        Symbolic x(d, Polynomial(big, bound));
        for (std::size_t alpha = 0; alpha < d; ++alpha) x[alpha] = Polynomial::variable(big, bound, i * d + alpha);
        powers[i] = {one, x};
    }
    Symbolic out(d, Polynomial(big, bound));
    for (const auto& [m, c] : f.terms()) {
        Symbolic term(d, Polynomial(big, bound));
        term[0] = Polynomial::constant(big, bound, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] == 0) continue;
            while (powers[i].size() <= m[i]) powers[i].push_back(symbolic_product(a, powers[i].back(), powers[i][1], bound));
            term = symbolic_product(a, term, powers[i][m[i]], bound);
        }
        for (std::size_t alpha = 0; alpha < d; ++alpha) out[alpha] += term[alpha];
    }
    return out;
}

std::vector<Polynomial> prolong_ideal(const std::vector<Polynomial>& generators, const WeilAlgebra& a) {
    std::vector<Polynomial> out;
    for (const auto& g : generators) {
        if (!generators.empty() && g.variables() != generators.front().variables())
            fail(ErrorKind::VariableCountMismatch, "generators live in different rings");
        for (auto& c : real_components(g, a)) out.push_back(std::move(c));
    }
    return out;
}

Vector component_coordinates(const APoint& p) {
    Vector out;
    for (const auto& v : p.images()) out.insert(out.end(), v.begin(), v.end());
    return out;
}

WeilIsoReport weil_iso_check(const Polynomial& f, const WeilAlgebra& a, const WeilAlgebra& b,
                             const std::vector<Vector>& pair_images) {
    const std::size_t n = f.variables();
    const std::size_t da = a.dimension();
    const std::size_t db = b.dimension();
    if (pair_images.size() != n) fail(ErrorKind::VariableCountMismatch, "one image per variable is required");
    for (const auto& v : pair_images)
        if (v.size() != da * db) fail(ErrorKind::DimensionMismatch, "pair image does not match dim A * dim B");

    WeilIsoReport r;
    // (M^A)^B: the coordinate x^i_alpha takes the B-value sum_beta p^i_{alpha beta} b^beta.
    std::vector<Vector> b_images;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t alpha = 0; alpha < da; ++alpha)
            b_images.emplace_back(pair_images[i].begin() + static_cast<long>(alpha * db),
                                  pair_images[i].begin() + static_cast<long>((alpha + 1) * db));
    for (const auto& fa : real_components(f, a)) {
        const Vector v = b.evaluate(fa, b_images);
        r.two_stage.insert(r.two_stage.end(), v.begin(), v.end());
    }

    const TensorProduct t = tensor_product(a, b);
    std::vector<Vector> t_images;
    for (const auto& pair : pair_images) {
        Vector q = t.algebra.zero();
        for (std::size_t p = 0; p < pair.size(); ++p)
            if (!is_zero(pair[p]))
                for (std::size_t k = 0; k < q.size(); ++k) q[k] += pair[p] * t.pair_to_quotient[p][k];
        t_images.push_back(std::move(q));
    }
    r.one_stage = weiljets::apply(t.quotient_to_pair, t.algebra.evaluate(f, t_images));
    r.equal = r.two_stage == r.one_stage;
    return r;
}

GroupLaw::GroupLaw(std::vector<Polynomial> law, Vector identity, std::vector<Polynomial> inverse)
    : law_(std::move(law)), identity_(std::move(identity)), inverse_(std::move(inverse)) {
    const std::size_t n = identity_.size();
    if (n == 0 || law_.size() != n || inverse_.size() != n)
        fail(ErrorKind::DimensionMismatch, "law, identity and inverse must have one entry per coordinate");
    for (const auto& f : law_)
        if (f.variables() != 2 * n) fail(ErrorKind::VariableCountMismatch, "the law is written in 2n variables");
    for (const auto& f : inverse_)
        if (f.variables() != n) fail(ErrorKind::VariableCountMismatch, "the inverse is written in n variables");

    std::vector<Polynomial> vars, consts, e_then_q, p_then_e, p_then_inv;
    for (std::size_t i = 0; i < n; ++i) {
        vars.push_back(Polynomial::variable(n, 1, i));
        consts.push_back(Polynomial::constant(n, 1, identity_[i]));
    }
    e_then_q = consts;
    e_then_q.insert(e_then_q.end(), vars.begin(), vars.end());
    p_then_e = vars;
    p_then_e.insert(p_then_e.end(), consts.begin(), consts.end());
    p_then_inv = vars;
    p_then_inv.insert(p_then_inv.end(), inverse_.begin(), inverse_.end());
    for (std::size_t k = 0; k < n; ++k) {
        if (!same_polynomial(substitute_exact(law_[k], e_then_q), vars[k]))
            fail(ErrorKind::AxiomViolation, "Phi(e, q) = q fails in coordinate " + std::to_string(k + 1));
        if (!same_polynomial(substitute_exact(law_[k], p_then_e), vars[k]))
            fail(ErrorKind::AxiomViolation, "Phi(p, e) = p fails in coordinate " + std::to_string(k + 1));
        if (!same_polynomial(substitute_exact(law_[k], p_then_inv), consts[k]))
            fail(ErrorKind::AxiomViolation, "Phi(p, inv p) = e fails in coordinate " + std::to_string(k + 1));
    }
}

Vector GroupLaw::multiply(const Vector& p, const Vector& q) const {
    Vector pq(p);
    pq.insert(pq.end(), q.begin(), q.end());
    Vector out;
    for (const auto& f : law_) out.push_back(evaluate_at_point(f, pq));
    return out;
}

Vector GroupLaw::invert(const Vector& p) const {
    Vector out;
    for (const auto& f : inverse_) out.push_back(evaluate_at_point(f, p));
    return out;
}

std::vector<Vector> GroupLaw::jacobian(int argument, const Vector& p, const Vector& q) const {
    const std::size_t n = dimension();
    Vector pq(p);
    pq.insert(pq.end(), q.begin(), q.end());
    std::vector<Vector> j(n, Vector(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            j[k][i] = evaluate_at_point(law_[k].derivative(static_cast<std::size_t>(argument) * n + i), pq);
    return j;
}

std::vector<Vector> GroupLaw::inverse_jacobian(const Vector& p) const {
    const std::size_t n = dimension();
    std::vector<Vector> j(n, Vector(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) j[k][i] = evaluate_at_point(inverse_[k].derivative(i), p);
    return j;
}

std::vector<Vector> GroupLaw::adjoint(const Vector& p) const {
    return matrix_product(jacobian(0, p, invert(p)), jacobian(1, p, identity_));
}

GroupLaw heisenberg_law() {
    const auto names = pair_variable_names(3);
    std::vector<Polynomial> law;
    for (const char* t : {"a1 + b1", "a2 + b2", "a3 + b3 + a1 b2"}) law.push_back(parse_polynomial(t, names));
    std::vector<Polynomial> inverse;
    for (const char* t : {"-x1", "-x2", "-x3 + x1 x2"}) inverse.push_back(parse_polynomial(t, 3));
    return GroupLaw(std::move(law), {0, 0, 0}, std::move(inverse));
}

APoint ProlongedGroup::multiply(const APoint& p, const APoint& q) const {
    if (!(p.algebra() == algebra_) || !(q.algebra() == algebra_)) fail(ErrorKind::AlgebraMismatch, "points of a different algebra");
    if (p.ambient_dimension() != law_.dimension() || q.ambient_dimension() != law_.dimension())
        fail(ErrorKind::DimensionMismatch, "points do not match the group dimension");
    const APoint pq = cartesian_product(p, q);
    std::vector<Vector> images;
    for (const auto& f : law_.law()) images.push_back(evaluate(f, pq));
    return APoint(algebra_, std::move(images));
}

APoint ProlongedGroup::identity() const { return APoint::constant(algebra_, law_.identity()); }

APoint ProlongedGroup::inverse(const APoint& p) const {
    if (!(p.algebra() == algebra_)) fail(ErrorKind::AlgebraMismatch, "point of a different algebra");
    std::vector<Vector> images;
    for (const auto& f : law_.inverse()) images.push_back(evaluate(f, p));
    return APoint(algebra_, std::move(images));
}

bool ProlongedGroup::axioms_hold(const APoint& p, const APoint& q, const APoint& r) const {
    const APoint e = identity();
    return multiply(multiply(p, q), r) == multiply(p, multiply(q, r)) && multiply(p, e) == p && multiply(e, p) == p &&
           multiply(p, inverse(p)) == e && multiply(inverse(p), p) == e;
}

ProlongedGroup prolong_group(const GroupLaw& law, const WeilAlgebra& a) { return ProlongedGroup(law, a); }

TangentCorrespondence tangent_correspondence_check(const Polynomial& f, const APoint& p,
                                                   const std::vector<Polynomial>& field) {
    const std::size_t n = p.ambient_dimension();
    if (f.variables() != n || field.size() != n) fail(ErrorKind::VariableCountMismatch, "f and the field must live on R^n");
    const WeilAlgebra& a = p.algebra();
    const std::size_t d = a.dimension();

    const unsigned bound = std::max(1u, f.degree() + max_degree(field));
    Polynomial df(n, bound);
    for (std::size_t i = 0; i < n; ++i) df += exact_product(field[i], f.derivative(i)).with_bound(bound);
    TangentCorrespondence t;
    t.direct = evaluate(df, p);

    const Vector x = component_coordinates(p);
    std::vector<Vector> lifted;  // (a^i)_beta at p^A
    for (const auto& c : field) lifted.push_back(evaluate(c, p));
    for (const auto& fa : real_components(f, a)) {
        Rational total = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t beta = 0; beta < d; ++beta)
                if (!is_zero(lifted[i][beta])) total += evaluate_at_point(fa.derivative(i * d + beta), x) * lifted[i][beta];
        t.induced.push_back(total);
    }
    t.equal = t.direct == t.induced;
    return t;
}

}  // namespace weiljets
