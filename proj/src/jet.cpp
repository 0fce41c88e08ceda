#include "weiljets/jet.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "weiljets/error.hpp"

namespace weiljets {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<Polynomial> rows_as_polynomials(const Subspace& s, const MonomialBasis& basis) {
    std::vector<Polynomial> out;
    for (const auto& r : s.basis()) out.push_back(Polynomial::from_dense(r, basis));
    return out;
}

/// Span of {f o images} for every basis row f, in window w.
Subspace substitute_rows(const Subspace& s, std::size_t n, unsigned from_window, const Substitution& images, unsigned w) {
    const MonomialBasis& src = monomial_basis(n, from_window);
    const MonomialBasis& dst = monomial_basis(n, w);
    EchelonBuilder builder(dst.size());
    for (const auto& r : s.basis()) {
        const Polynomial f = truncated_substitute(Polynomial::from_dense(r, src), images, w);
        if (!f.is_zero()) builder.add(f.with_bound(w).to_dense(dst));
    }
    return builder.finish();
}

Substitution rebound(const Substitution& s, unsigned bound) {
    Substitution out;
    for (const auto& p : s) out.push_back(p.with_bound(bound));
    return out;
}

Polynomial apply_field(const std::vector<Polynomial>& field, const Polynomial& f, unsigned w) {
    Polynomial out(f.variables(), w);
    for (std::size_t i = 0; i < field.size(); ++i) {
        if (field[i].is_zero()) continue;
        out += truncated_product(field[i], f.derivative(i), w);
    }
    return out;
}

Vector concat(const std::vector<Vector>& parts) {
    Vector out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Jet::Jet(Vector base_point, WeilAlgebra algebra, bool classical_flag)
    : base_(std::move(base_point)), algebra_(std::move(algebra)), classical_flag_(classical_flag) {
    if (base_.size() != algebra_.variables()) fail(ErrorKind::DimensionMismatch, "base point does not match the ambient dimension");
}

bool Jet::is_classical() const { return algebra_.dimension() == binomial(width() + order(), order()); }

std::vector<Polynomial> Jet::generators() const {
    std::vector<Polynomial> out;
    for (auto& g : algebra_.minimal_generators())
        if (g.low_degree() < window()) out.push_back(std::move(g));
    return out;
}

std::vector<Polynomial> Jet::generators_at_point() const {
    Vector minus(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i) minus[i] = -base_[i];
    std::vector<Polynomial> out;
    for (const auto& g : generators()) out.push_back(translate(g, minus));
    return out;
}

bool Jet::contains(const Polynomial& f) const {
    if (f.variables() != ambient_dimension()) fail(ErrorKind::VariableCountMismatch, "polynomial has the wrong number of variables");
    return ideal().contains(f.with_bound(window()).to_dense(algebra_.ambient()));
}

Subspace Jet::ideal_in_window(unsigned w) const {
    const unsigned own = window();
    if (w < own) fail(ErrorKind::DimensionMismatch, "cannot embed a jet ideal into a smaller window");
    if (w == own) return ideal();
    const MonomialBasis& big = monomial_basis(ambient_dimension(), w);
    std::vector<Vector> rows;
    for (const auto& r : ideal().basis()) {
        Vector v(big.size());
        std::copy(r.begin(), r.end(), v.begin());
        rows.push_back(std::move(v));
    }
    for (std::size_t j = big.degree_offset(own); j < big.size(); ++j) {
        Vector v(big.size());
        v[j] = 1;
        rows.push_back(std::move(v));
    }
    return Subspace::span(rows, big.size());
}

Polynomial translate(const Polynomial& f, const Vector& b) {
    if (b.size() != f.variables()) fail(ErrorKind::DimensionMismatch, "point does not match the number of variables");
    const unsigned bound = std::max(1u, f.degree_bound());
    Substitution images;
    for (std::size_t i = 0; i < b.size(); ++i)
        images.push_back(Polynomial::variable(b.size(), bound, i) + Polynomial::constant(b.size(), bound, b[i]));
    return truncated_substitute(f, images, bound).with_bound(f.degree_bound());
}

Rational evaluate_at_point(const Polynomial& f, const Vector& point) {
    if (point.size() != f.variables()) fail(ErrorKind::DimensionMismatch, "point does not match the number of variables");
    Rational total = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned k = 0; k < m[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

Jet jet_from_subspace(const Vector& base_point, std::size_t n, unsigned window, const Subspace& ideal) {
    return Jet(base_point, WeilAlgebra::from_ideal(n, window, ideal));
}

Jet jet_from_ideal(std::size_t n, const Vector& base_point, const std::vector<Polynomial>& generators, unsigned order_hint) {
    if (base_point.size() != n) fail(ErrorKind::DimensionMismatch, "base point does not match the ambient dimension");
    std::vector<Polynomial> local;
    for (const auto& g : generators) {
        if (g.variables() != n) fail(ErrorKind::VariableCountMismatch, "generator has the wrong number of variables");
        Polynomial t = translate(g, base_point);
        if (!t.is_zero() && t.low_degree() > order_hint)
            fail(ErrorKind::HintTooSmall, "a generator lies in m^(hint+1); raise order_hint");
        local.push_back(std::move(t));
    }
    return jet_from_subspace(base_point, n, order_hint + 1, saturate_ideal(n, order_hint + 1, local));
}

Jet classical_jet(std::size_t n, const Vector& base_point, const std::vector<std::pair<std::size_t, Polynomial>>& graph,
                  unsigned order) {
    std::set<std::size_t> dependent;
    for (const auto& [j, f] : graph) {
        if (j >= n) fail(ErrorKind::VariableCountMismatch, "graph variable out of range");
        if (!dependent.insert(j).second) fail(ErrorKind::SchemaViolation, "graph variable listed twice");
    }
    std::vector<Polynomial> gens;
    for (const auto& [j, f] : graph) {
        if (f.variables() != n) fail(ErrorKind::VariableCountMismatch, "graph function has the wrong number of variables");
        for (const auto& [m, c] : f.terms())
            for (std::size_t k : dependent)
                if (m[k] > 0) fail(ErrorKind::SchemaViolation, "graph functions may only involve the free variables");
        const unsigned bound = std::max(1u, f.degree_bound());
        gens.push_back(Polynomial::variable(n, bound, j) - f.with_bound(bound));
    }
    Jet p = jet_from_ideal(n, base_point, gens, order);
    const std::size_t m = n - graph.size();
    ensure(p.algebra().dimension() == binomial(m + order, order) && (order == 0 || (p.width() == m && p.order() == order)),
           "graph jet is classical");
    return Jet(p.base_point(), p.algebra(), true);
}

Jet hat_ideal(const Jet& p) {
    const std::size_t n = p.ambient_dimension();
    const unsigned w2 = p.window() + 1;
    const MonomialBasis& big = monomial_basis(n, w2);
    const Subspace big_p = p.ideal_in_window(w2);
    const auto rows = rows_as_polynomials(big_p, big);
    const WeilAlgebra& a = p.algebra();
    // columns: [d_i f_k]_A stacked over i
    std::vector<Vector> columns;
    for (const auto& f : rows) {
        std::vector<Vector> parts;
        for (std::size_t i = 0; i < n; ++i) parts.push_back(a.reduce(f.derivative(i)));
        columns.push_back(concat(parts));
    }
    const std::size_t height = n * a.dimension();
    std::vector<Vector> system(height, Vector(rows.size()));
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t r = 0; r < height; ++r) system[r][k] = columns[k][r];
    const Subspace combos = nullspace(system, rows.size());
    std::vector<Vector> hat_rows;
    for (const auto& c : combos.basis()) {
        Vector v(big.size());
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (!is_zero(c[k]))
                for (std::size_t j = 0; j < v.size(); ++j) v[j] += c[k] * big_p.basis()[k][j];
        hat_rows.push_back(std::move(v));
    }
    const Subspace hat = Subspace::span(hat_rows, big.size());

    const auto gens = p.generators();
    std::vector<Polynomial> squares;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) squares.push_back(truncated_product(gens[i], gens[j], w2));
    ensure(hat.contains(saturate_ideal(n, w2, squares)), "p^2 lies in p-hat");
    ensure(big_p.contains(hat), "p-hat lies in p");
    return jet_from_subspace(p.base_point(), n, w2, hat);
}

TangentModule tangent_module(const Jet& p) {
    TangentModule t;
    t.ambient_dimension = p.ambient_dimension() * p.algebra().dimension();
    t.relations = derivation_space(p.algebra()).tuples;
    t.dimension = t.ambient_dimension - t.relations.dimension();
    return t;
}

Vector value_of_field(const Jet& p, const std::vector<Polynomial>& coefficients) {
    if (coefficients.size() != p.ambient_dimension()) fail(ErrorKind::VariableCountMismatch, "a field needs one coefficient per variable");
    std::vector<Vector> parts;
    for (const auto& c : coefficients) parts.push_back(p.algebra().reduce(c));
    return concat(parts);
}

CotangentModule cotangent_module(const Jet& p) {
    const std::size_t n = p.ambient_dimension();
    const unsigned w2 = p.window() + 1;
    const MonomialBasis& big = monomial_basis(n, w2);
    const Subspace big_p = p.ideal_in_window(w2);
    const Subspace hat = hat_ideal(p).ideal_in_window(w2);
    CotangentModule c;
    c.dimension = big_p.dimension() - hat.dimension();
    EchelonBuilder builder(big.size());
    for (const auto& r : hat.basis()) builder.add(r);
    for (const auto& r : big_p.basis())
        if (builder.add(r)) c.basis.push_back(Polynomial::from_dense(r, big));
    ensure(c.basis.size() == c.dimension, "cotangent basis size");
    return c;
}

Vector differential(const Jet& p, const Polynomial& f, const Vector& tangent) {
    const WeilAlgebra& a = p.algebra();
    const std::size_t n = p.ambient_dimension();
    if (tangent.size() != n * a.dimension()) fail(ErrorKind::DimensionMismatch, "tangent tuple must lie in A^n");
    if (!p.contains(f)) fail(ErrorKind::FNotInIdeal, "d_p f needs f in p");
    Vector out(a.dimension());
    for (std::size_t i = 0; i < n; ++i) {
        const Vector d(tangent.begin() + static_cast<long>(i * a.dimension()),
                       tangent.begin() + static_cast<long>((i + 1) * a.dimension()));
        const Vector term = a.multiply(a.reduce(f.derivative(i)), d);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += term[k];
    }
    return out;
}

Subspace jet_fields(const Jet& p) {
    const std::size_t n = p.ambient_dimension();
    const WeilAlgebra& a = p.algebra();
    const MonomialBasis& coeffs = monomial_basis(n, p.order());
    const std::size_t s = coeffs.size();
    std::vector<Vector> mono_classes;
    for (const auto& m : coeffs.monomials()) mono_classes.push_back(a.reduce(Polynomial::monomial(p.order(), m)));
    std::vector<Vector> rows;
    for (const auto& g : a.minimal_generators()) {
        std::vector<Vector> block(a.dimension(), Vector(n * s));
        for (std::size_t i = 0; i < n; ++i) {
            const Vector dg = a.reduce(g.derivative(i));
            for (std::size_t k = 0; k < s; ++k) {
                const Vector v = a.multiply(mono_classes[k], dg);
                for (std::size_t r = 0; r < v.size(); ++r) block[r][i * s + k] = v[r];
            }
        }
        for (auto& r : block)
            if (!is_zero(r)) rows.push_back(std::move(r));
    }
    return nullspace(rows, n * s);
}

bool fields_preserve(const Subspace& fields, std::size_t n, unsigned field_window, const Jet& q) {
    const MonomialBasis& coeffs = monomial_basis(n, field_window);
    const std::size_t s = coeffs.size();
    if (fields.ambient_dimension() != n * s) fail(ErrorKind::DimensionMismatch, "field layout does not match");
    const auto gens = q.algebra().minimal_generators();
    for (const auto& v : fields.basis()) {
        std::vector<Polynomial> field;
        for (std::size_t i = 0; i < n; ++i)
            field.push_back(Polynomial::from_dense(Vector(v.begin() + static_cast<long>(i * s), v.begin() + static_cast<long>((i + 1) * s)), coeffs));
        for (const auto& g : gens)
            if (!is_zero(q.algebra().reduce(apply_field(field, g, q.window())))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

NormalForm normal_form(const Jet& p) {
    const std::size_t n = p.ambient_dimension();
    const unsigned l = p.order();
    const unsigned w = p.window();
    const unsigned ls = std::max(1u, l);
    const MonomialBasis& amb = monomial_basis(n, w);
    NormalForm nf;

    std::vector<long> pivot_row(n, -1);
    for (std::size_t r = 0; r < p.ideal().dimension(); ++r) {
        const std::size_t piv = p.ideal().pivots()[r];
        if (piv >= 1 && piv <= n) pivot_row[piv - 1] = static_cast<long>(r);
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (pivot_row[k] >= 0) {
            nf.y_variables.push_back(k);
            nf.tau.push_back(Polynomial::from_dense(p.ideal().basis()[static_cast<std::size_t>(pivot_row[k])], amb).with_bound(ls));
        } else {
            nf.x_variables.push_back(k);
            nf.tau.push_back(Polynomial::variable(n, ls, k));
        }
    }
    ensure(nf.y_variables.size() == n - p.width(), "pivot count equals n - width");
    nf.sigma = inverse_substitution(nf.tau, ls);

    nf.transformed = substitute_rows(p.ideal(), n, w, rebound(nf.sigma, w), w);
    for (std::size_t y : nf.y_variables)
        ensure(nf.transformed.contains(Polynomial::variable(n, w, y).to_dense(amb)), "adapted coordinates lie in the ideal");

    std::vector<std::size_t> x_only;
    for (std::size_t j = amb.degree_offset(2); j < amb.degree_offset(w); ++j) {
        bool pure = true;
        for (std::size_t y : nf.y_variables) pure = pure && amb[j][y] == 0;
        if (pure) x_only.push_back(j);
    }
    const Subspace part = intersection(nf.transformed, Subspace::coordinate(x_only, amb.size()));
    nf.x_part = rows_as_polynomials(part, amb);

    // Q^h: rows of the x-part independent modulo m_x * (x-part), below degree w.
    EchelonBuilder shifted(amb.size());
    for (const auto& q : nf.x_part)
        for (std::size_t x : nf.x_variables) {
            const Polynomial s = truncated_product(q, Polynomial::variable(n, w, x), l);
            if (!s.is_zero()) shifted.add(s.with_bound(w).to_dense(amb));
        }
    for (std::size_t k = 0; k < nf.x_part.size(); ++k)
        if (shifted.add(part.basis()[k])) nf.q_list.push_back(nf.x_part[k]);

    std::vector<Polynomial> gens;
    for (std::size_t y : nf.y_variables) gens.push_back(Polynomial::variable(n, w, y));
    gens.insert(gens.end(), nf.q_list.begin(), nf.q_list.end());
    ensure(saturate_ideal(n, w, gens) == nf.transformed, "normal form reproduces the ideal");
    return nf;
}

Jet derived_jet(const Jet& p) {
    if (p.order() == 0) return p;
    const std::size_t n = p.ambient_dimension();
    const unsigned l = p.order();
    const NormalForm nf = normal_form(p);
    std::vector<Polynomial> gens;
    for (std::size_t y : nf.y_variables) gens.push_back(Polynomial::variable(n, l, y));
    for (const auto& q : nf.q_list) {
        gens.push_back(q.with_bound(l));
        for (std::size_t x : nf.x_variables) gens.push_back(q.derivative(x).with_bound(l));
    }
    const Subspace adapted = saturate_ideal(n, l, gens);
    const Subspace original = substitute_rows(adapted, n, l, rebound(nf.tau, l), l);
    Jet d = jet_from_subspace(p.base_point(), n, l, original);
    ensure(ideal_contains(d, p), "p lies in p'");
    return d;
}

std::vector<std::vector<Polynomial>> cartan_family(const Jet& p, const NormalForm& nf) {
    const std::size_t n = p.ambient_dimension();
    const unsigned w = p.window();
    std::vector<std::vector<Polynomial>> fields;
    auto coordinate_field = [&](std::size_t x) {
        std::vector<Polynomial> f(n, Polynomial(n, w));
        f[x] = Polynomial::constant(n, w, 1);
        return f;
    };
    for (std::size_t x : nf.x_variables) fields.push_back(coordinate_field(x));
    std::vector<Polynomial> corrections;
    const MonomialBasis& top = monomial_basis(n, w);
    for (std::size_t j = top.degree_offset(w); j < top.size(); ++j) {
        bool pure = true;
        for (std::size_t y : nf.y_variables) pure = pure && top[j][y] == 0;
        if (pure) corrections.push_back(Polynomial::monomial(w, top[j]));
    }
    corrections.insert(corrections.end(), nf.x_part.begin(), nf.x_part.end());
    for (const auto& h : corrections)
        for (std::size_t x : nf.x_variables) {
            const Polynomial dh = h.derivative(x).with_bound(w);
            if (dh.is_zero()) continue;
            for (std::size_t y : nf.y_variables) {
                auto f = coordinate_field(x);
                f[y] = dh;
                fields.push_back(std::move(f));
            }
        }
    return fields;
}

Jet cartan_generation_oracle(const Jet& p) {
    if (p.order() == 0) return p;
    const std::size_t n = p.ambient_dimension();
    const unsigned w = p.window();
    const NormalForm nf = normal_form(p);
    const auto gens = WeilAlgebra::from_ideal(n, w, nf.transformed).minimal_generators();
    std::vector<Polynomial> all(gens);
    for (const auto& field : cartan_family(p, nf))
        for (const auto& g : gens) all.push_back(apply_field(field, g, w));
    const Subspace adapted = saturate_ideal(n, w, all);
    const Subspace original = substitute_rows(adapted, n, w, rebound(nf.tau, w), w);
    return jet_from_subspace(p.base_point(), n, w, original);
}

bool ideal_contains(const Jet& q, const Jet& p) {
    if (q.ambient_dimension() != p.ambient_dimension()) fail(ErrorKind::DimensionMismatch, "jets live in different spaces");
    if (q.base_point() != p.base_point()) return false;
    const unsigned w = std::max(q.window(), p.window());
    return q.ideal_in_window(w).contains(p.ideal_in_window(w));
}

std::vector<Vector> tangent_projection(const Jet& p, const Jet& q) {
    const std::size_t n = p.ambient_dimension();
    const WeilAlgebra& a = p.algebra();
    const WeilAlgebra& b = q.algebra();
    std::vector<Vector> pi(b.dimension(), Vector(a.dimension()));
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        const Vector img = b.reduce(Polynomial::monomial(a.window(), a.basis()[k]));
        for (std::size_t r = 0; r < img.size(); ++r) pi[r][k] = img[r];
    }
    std::vector<Vector> big(n * b.dimension(), Vector(n * a.dimension()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < b.dimension(); ++r)
            for (std::size_t k = 0; k < a.dimension(); ++k) big[i * b.dimension() + r][i * a.dimension() + k] = pi[r][k];
    return big;
}

ContactData contact_and_cartan(const Jet& p) {
    const std::size_t n = p.ambient_dimension();
    const WeilAlgebra& a = p.algebra();
    const std::size_t d = a.dimension();
    ContactData c(derived_jet(p));
    const WeilAlgebra& ap = c.derived.algebra();
    const std::size_t dp = ap.dimension();

    c.projection.assign(dp, Vector(d));
    for (std::size_t k = 0; k < d; ++k) {
        const Vector img = ap.reduce(Polynomial::monomial(a.window(), a.basis()[k]));
        for (std::size_t r = 0; r < dp; ++r) c.projection[r][k] = img[r];
    }
    c.relations = derivation_space(a).tuples;
    c.derived_relations = derivation_space(ap).tuples;

    EchelonBuilder omega(n * d);
    for (const auto& f : rows_as_polynomials(p.ideal(), a.ambient())) {
        std::vector<std::vector<Vector>> blocks;
        for (std::size_t i = 0; i < n; ++i) {
            const auto m = a.multiplication_matrix(a.reduce(f.derivative(i)));
            std::vector<Vector> pm(dp, Vector(d));
            for (std::size_t r = 0; r < dp; ++r)
                for (std::size_t k = 0; k < d; ++k) {
                    if (is_zero(c.projection[r][k])) continue;
                    for (std::size_t b = 0; b < d; ++b)
                        if (!is_zero(m[k][b])) pm[r][b] += c.projection[r][k] * m[k][b];
                }
            blocks.push_back(std::move(pm));
        }
        for (std::size_t r = 0; r < dp; ++r) {
            Vector row(n * d);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t b = 0; b < d; ++b) row[i * d + b] = blocks[i][r][b];
            if (!is_zero(row)) omega.add(std::move(row));
        }
    }
    c.omega = omega.finish();
    for (const auto& w : c.omega.basis())
        for (const auto& r : c.relations.basis()) ensure(is_zero(dot(w, r)), "d'_p f vanishes on Der(A, A)");
    c.cartan = nullspace(c.omega.basis(), n * d);
    ensure(c.cartan.contains(c.relations), "relations lie in the annihilator");
    c.tangent_dimension = n * d - c.relations.dimension();
    c.rank = c.omega.dimension();
    c.cartan_dimension = c.cartan.dimension() - c.relations.dimension();

    std::vector<Vector> generated(c.relations.basis());
    if (p.order() > 0) {
        const NormalForm nf = normal_form(p);
        const unsigned w = p.window();
        const Substitution tau = rebound(nf.tau, w);
        for (const auto& field : cartan_family(p, nf)) {
            std::vector<Vector> parts;
            for (std::size_t i = 0; i < n; ++i) {
                const Polynomial ds = apply_field(field, nf.sigma[i].with_bound(w), w);
                parts.push_back(a.reduce(truncated_substitute(ds, tau, w)));
            }
            std::vector<Vector> value(parts);
            for (std::size_t k = 0; k < d; ++k) {
                Vector e(d);
                e[k] = 1;
                std::vector<Vector> scaled;
                for (const auto& v : value) scaled.push_back(a.multiply(e, v));
                generated.push_back(concat(scaled));
            }
        }
    }
    c.generated_cartan = Subspace::span(generated, n * d);
    c.annihilator_identity = c.generated_cartan == c.cartan;

    const auto pi_star = tangent_projection(p, c.derived);
    c.relations_projected = c.derived_relations.contains(image(pi_star, c.relations, n * dp));
    const Subspace functionals = nullspace(c.derived_relations.basis(), n * dp);
    std::vector<Vector> pulled;
    for (const auto& f : functionals.basis()) {
        Vector row(n * d);
        for (std::size_t r = 0; r < f.size(); ++r) {
            if (is_zero(f[r])) continue;
            for (std::size_t k = 0; k < row.size(); ++k)
                if (!is_zero(pi_star[r][k])) row[k] += f[r] * pi_star[r][k];
        }
        pulled.push_back(std::move(row));
    }
    c.kernel_in_cartan = c.cartan.contains(nullspace(pulled, n * d));
    return c;
}

TaylorData taylor_map(const Jet& p) { return taylor_map(p, contact_and_cartan(p)); }

TaylorData taylor_map(const Jet& p, const ContactData& contact) {
    const std::size_t n = p.ambient_dimension();
    const std::size_t dp = contact.derived.algebra().dimension();
    ensure(contact.relations_projected, "D(p) lies in D(p')");
    const auto pi_star = tangent_projection(p, contact.derived);
    TaylorData t{contact.derived, sum(image(pi_star, contact.cartan, n * dp), contact.derived_relations), 0, false};
    t.image_dimension = t.image.dimension() - contact.derived_relations.dimension();
    t.taylor_condition = ideal_contains(p, hat_ideal(contact.derived));
    return t;
}

// ---------------------------------------------------------------------------

namespace {

struct LocalMap {
    Vector target_point;
    std::vector<Polynomial> centred;  // phi(x + b) - phi(b)
};

LocalMap localize(const Jet& p, const std::vector<Polynomial>& phi) {
    if (phi.empty()) fail(ErrorKind::VariableCountMismatch, "a map needs at least one component");
    LocalMap m;
    for (const auto& f : phi) {
        if (f.variables() != p.ambient_dimension()) fail(ErrorKind::VariableCountMismatch, "map component has the wrong number of variables");
        const Rational value = evaluate_at_point(f, p.base_point());
        m.target_point.push_back(value);
        Polynomial t = translate(f, p.base_point());
        t -= Polynomial::constant(t.variables(), t.degree_bound(), value);
        m.centred.push_back(std::move(t));
    }
    return m;
}

}  // namespace

Jet pushforward(const Jet& p, const std::vector<Polynomial>& phi) {
    const LocalMap m = localize(p, phi);
    const WeilAlgebra& a = p.algebra();
    std::vector<Vector> images;
    for (const auto& f : m.centred) images.push_back(a.reduce(f));
    const std::size_t big_n = phi.size();
    const unsigned w = p.window();
    const MonomialBasis& target = monomial_basis(big_n, w);
    std::vector<Vector> system(a.dimension(), Vector(target.size()));
    for (std::size_t j = 0; j < target.size(); ++j) {
        const Vector v = a.evaluate(Polynomial::monomial(w, target[j]), images);
        for (std::size_t r = 0; r < v.size(); ++r) system[r][j] = v[r];
    }
    return jet_from_subspace(m.target_point, big_n, w, nullspace(system, target.size()));
}

TangentMap tangent_map(const Jet& p, const std::vector<Polynomial>& phi) {
    const LocalMap m = localize(p, phi);
    const WeilAlgebra& a = p.algebra();
    const std::size_t n = p.ambient_dimension();
    const std::size_t d = a.dimension();
    TangentMap t{false, false, pushforward(p, phi), {}};
    const WeilAlgebra& b = t.image_jet.algebra();

    std::vector<Vector> images;
    for (const auto& f : m.centred) images.push_back(a.reduce(f));
    EchelonBuilder sub(d);
    std::deque<Vector> pending{a.one()};
    while (!pending.empty()) {
        Vector v = std::move(pending.front());
        pending.pop_front();
        if (!sub.add(v)) continue;
        for (const auto& g : images) pending.push_back(a.multiply(g, v));
    }
    const Subspace s = sub.finish();
    t.regular = s.dimension() == d;

    std::vector<std::vector<Vector>> partials(phi.size());
    for (std::size_t j = 0; j < phi.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) partials[j].push_back(a.reduce(m.centred[j].derivative(i)));
    t.exists = true;
    for (const auto& row : partials)
        for (const auto& dphi : row)
            for (std::size_t k = 0; k < d && t.exists; ++k) {
                Vector e(d);
                e[k] = 1;
                if (!s.contains(a.multiply(dphi, e))) t.exists = false;
            }
    if (!t.exists) return t;

    // B -> S, [g] -> [g o phi]_A, is injective; invert on S.
    std::vector<Vector> iso(d, Vector(b.dimension()));
    for (std::size_t c = 0; c < b.dimension(); ++c) {
        const Vector v = a.evaluate(Polynomial::monomial(b.window(), b.basis()[c]), images);
        for (std::size_t r = 0; r < d; ++r) iso[r][c] = v[r];
    }
    const std::size_t rows = phi.size() * b.dimension();
    t.matrix.assign(rows, Vector(n * d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            Vector e(d);
            e[k] = 1;
            for (std::size_t j = 0; j < phi.size(); ++j) {
                const auto coords = solve(iso, a.multiply(partials[j][i], e), b.dimension());
                ensure(coords.has_value(), "values lie in the image subalgebra");
                for (std::size_t c = 0; c < b.dimension(); ++c) t.matrix[j * b.dimension() + c][i * d + k] = (*coords)[c];
            }
        }
    const Subspace rel_a = derivation_space(a).tuples;
    ensure(derivation_space(b).tuples.contains(image(t.matrix, rel_a, rows)), "Der(A) maps into Der(B)");
    return t;
}

}  // namespace weiljets
