#include "weiljets/weil_algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "weiljets/error.hpp"
#include "weiljets/poly_text.hpp"

namespace weiljets {

Subspace saturate_ideal(std::size_t variables, unsigned window, const std::vector<Polynomial>& generators) {
    const MonomialBasis& basis = monomial_basis(variables, window);
    EchelonBuilder builder(basis.size());
    for (std::size_t j = basis.degree_offset(window); j < basis.size(); ++j) {
        Vector e(basis.size());
        e[j] = 1;
        builder.add(std::move(e));
    }
    std::deque<Polynomial> pending;
    for (const auto& g : generators) {
        if (g.variables() != variables) fail(ErrorKind::VariableCountMismatch, "generator has the wrong number of variables");
        pending.push_back(g.with_bound(window));
    }
    while (!pending.empty()) {
        Polynomial f = std::move(pending.front());
        pending.pop_front();
        if (f.is_zero() || f.low_degree() >= window) continue;
        if (!builder.add(f.to_dense(basis))) continue;
        for (std::size_t i = 0; i < variables; ++i)
            pending.push_back(truncated_product(f, Polynomial::variable(variables, window, i), window));
    }
    return builder.finish();
}

std::shared_ptr<WeilAlgebra::Data> WeilAlgebra::build(std::size_t variables, unsigned window, const Subspace& ideal) {
    if (variables == 0) fail(ErrorKind::VariableCountMismatch, "a Weil algebra needs at least one variable");
    const MonomialBasis& amb = monomial_basis(variables, window);
    if (ideal.ambient_dimension() != amb.size()) fail(ErrorKind::DimensionMismatch, "ideal does not live in R_n^W");
    if (!ideal.pivots().empty() && ideal.pivots().front() == 0)
        fail(ErrorKind::EmptyQuotient, "the ideal contains a unit, so the quotient is zero");

    auto d = std::make_shared<Data>();
    d->variables = variables;
    d->window = window;
    d->ideal = ideal;
    d->basis_columns = ideal.free_columns();
    const std::size_t dim = d->basis_columns.size();
    std::vector<long> column_to_basis(amb.size(), -1);
    for (std::size_t k = 0; k < dim; ++k) {
        d->basis.push_back(amb[d->basis_columns[k]]);
        column_to_basis[d->basis_columns[k]] = static_cast<long>(k);
    }
    for (std::size_t k = 0; k < dim; ++k)
        if (amb[d->basis_columns[k]].degree() >= window)
            fail(ErrorKind::NotAnIdeal, "the ideal must contain every monomial of the window degree");

    d->normal_form.assign(amb.size(), Vector(dim));
    for (std::size_t k = 0; k < dim; ++k) d->normal_form[d->basis_columns[k]][k] = 1;
    for (std::size_t r = 0; r < ideal.dimension(); ++r) {
        const Vector& row = ideal.basis()[r];
        Vector& nf = d->normal_form[ideal.pivots()[r]];
        for (std::size_t k = 0; k < dim; ++k) nf[k] = -row[d->basis_columns[k]];
    }

    d->products.resize(dim * dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a; b < dim; ++b) {
            const MultiIndex m = d->basis[a] + d->basis[b];
            std::vector<std::pair<std::size_t, Rational>> entries;
            if (m.degree() < window) {
                const Vector& nf = d->normal_form[amb.index_of(m)];
                for (std::size_t g = 0; g < dim; ++g)
                    if (!is_zero(nf[g])) entries.emplace_back(g, nf[g]);
            }
            d->products[a * dim + b] = entries;
            d->products[b * dim + a] = std::move(entries);
        }

    for (unsigned k = 0; k <= window; ++k) {
        std::vector<Vector> rows;
        for (std::size_t j = amb.degree_offset(k); j < amb.degree_offset(window); ++j)
            if (!is_zero(d->normal_form[j])) rows.push_back(d->normal_form[j]);
        d->powers.push_back(Subspace::span(rows, dim));
    }
    while (d->powers.size() < 3) d->powers.push_back(Subspace(dim));
    d->order = 0;
    for (unsigned k = 1; k < d->powers.size(); ++k)
        if (!d->powers[k].is_zero()) d->order = k;
    for (unsigned k = 1; k + 1 < d->powers.size(); ++k)
        ensure(d->powers[k].contains(d->powers[k + 1]), "maximal ideal filtration is decreasing");
    return d;
}

WeilAlgebra WeilAlgebra::from_ideal(std::size_t variables, unsigned window, const Subspace& ideal) {
    auto d = build(variables, window, ideal);
    if (d->order + 1 < window) {
        const unsigned w = d->order + 1;
        const std::size_t size = monomial_basis(variables, w).size();
        std::vector<Vector> rows;
        for (const auto& r : ideal.basis()) {
            Vector t(r.begin(), r.begin() + static_cast<long>(size));
            if (!is_zero(t)) rows.push_back(std::move(t));
        }
        d = build(variables, w, Subspace::span(rows, size));
    }
    return WeilAlgebra(std::move(d));
}

WeilAlgebra WeilAlgebra::quotient(std::size_t variables, const std::vector<Polynomial>& relations, unsigned L) {
    return from_ideal(variables, L + 1, saturate_ideal(variables, L + 1, relations));
}

WeilAlgebra WeilAlgebra::truncated(std::size_t variables, unsigned order) { return quotient(variables, {}, order); }

WeilAlgebra WeilAlgebra::reals() { return truncated(1, 0); }

std::size_t WeilAlgebra::width() const { return data_->powers[1].dimension() - data_->powers[2].dimension(); }

const Subspace& WeilAlgebra::maximal_power(unsigned k) const {
    return k < data_->powers.size() ? data_->powers[k] : data_->powers.back();
}

std::vector<std::size_t> WeilAlgebra::filtration() const {
    std::vector<std::size_t> dims;
    for (unsigned k = 1; k <= order() + 1; ++k) dims.push_back(maximal_power(k).dimension());
    return dims;
}

bool WeilAlgebra::is_truncated_ring() const { return dimension() == ambient().degree_offset(window()); }

Vector WeilAlgebra::one() const {
    Vector e(dimension());
    e[0] = 1;
    return e;
}

Vector WeilAlgebra::generator(std::size_t i) const {
    if (i >= variables()) fail(ErrorKind::VariableCountMismatch, "no such coordinate");
    return data_->normal_form[ambient().index_of(MultiIndex::unit(variables(), i))];
}

Vector WeilAlgebra::reduce(const Polynomial& f) const {
    if (f.variables() != variables()) fail(ErrorKind::VariableCountMismatch, "polynomial has the wrong number of variables");
    const MonomialBasis& amb = ambient();
    Vector out(dimension());
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() >= window()) break;
        const Vector& nf = data_->normal_form[amb.index_of(m)];
        for (std::size_t k = 0; k < out.size(); ++k)
            if (!is_zero(nf[k])) out[k] += c * nf[k];
    }
    return out;
}

Vector WeilAlgebra::reduce_dense(const Vector& v) const {
    if (v.size() != data_->normal_form.size()) fail(ErrorKind::DimensionMismatch, "vector does not match R_n^W");
    Vector out(dimension());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (is_zero(v[j])) continue;
        const Vector& nf = data_->normal_form[j];
        for (std::size_t k = 0; k < out.size(); ++k)
            if (!is_zero(nf[k])) out[k] += v[j] * nf[k];
    }
    return out;
}

Polynomial WeilAlgebra::lift(const Vector& a) const {
    if (a.size() != dimension()) fail(ErrorKind::DimensionMismatch, "element does not match the algebra dimension");
    Polynomial p(variables(), window());
    for (std::size_t k = 0; k < a.size(); ++k) p.add_term(data_->basis[k], a[k]);
    return p;
}

const std::vector<std::pair<std::size_t, Rational>>& WeilAlgebra::product(std::size_t alpha, std::size_t beta) const {
    return data_->products[alpha * dimension() + beta];
}

Vector WeilAlgebra::multiply(const Vector& a, const Vector& b) const {
    const std::size_t dim = dimension();
    if (a.size() != dim || b.size() != dim) fail(ErrorKind::DimensionMismatch, "element does not match the algebra dimension");
    Vector out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (is_zero(b[j])) continue;
            const Rational ab = a[i] * b[j];
            for (const auto& [g, c] : data_->products[i * dim + j]) out[g] += ab * c;
        }
    }
    return out;
}

std::vector<Vector> WeilAlgebra::multiplication_matrix(const Vector& a) const {
    const std::size_t dim = dimension();
    if (a.size() != dim) fail(ErrorKind::DimensionMismatch, "element does not match the algebra dimension");
    std::vector<Vector> m(dim, Vector(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (const auto& [g, c] : data_->products[i * dim + j]) m[g][j] += a[i] * c;
    }
    return m;
}

Vector WeilAlgebra::evaluate(const Polynomial& f, const std::vector<Vector>& images) const {
    if (images.size() != f.variables()) fail(ErrorKind::VariableCountMismatch, "one image per variable is required");
    for (const auto& img : images)
        if (img.size() != dimension()) fail(ErrorKind::DimensionMismatch, "image does not match the algebra dimension");
    std::vector<unsigned> max_exp(images.size(), 0);
    for (const auto& [m, c] : f.terms())
        for (std::size_t i = 0; i < m.size(); ++i) max_exp[i] = std::max(max_exp[i], m[i]);
    std::vector<std::vector<Vector>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        powers[i].push_back(one());
        for (unsigned k = 1; k <= max_exp[i]; ++k) powers[i].push_back(multiply(powers[i].back(), images[i]));
    }
    Vector out(dimension());
    for (const auto& [m, c] : f.terms()) {
        Vector term = one();
        for (std::size_t k = 0; k < term.size(); ++k) term[k] *= c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) term = multiply(term, powers[i][m[i]]);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += term[k];
    }
    return out;
}

std::vector<Polynomial> WeilAlgebra::minimal_generators() const {
    const MonomialBasis& amb = ambient();
    EchelonBuilder shifted(amb.size());
    std::vector<Polynomial> rows;
    for (const auto& r : ideal().basis()) rows.push_back(Polynomial::from_dense(r, amb));
    for (const auto& r : rows)
        for (std::size_t i = 0; i < variables(); ++i) {
            Polynomial p = truncated_product(r, Polynomial::variable(variables(), window(), i), window());
            if (!p.is_zero()) shifted.add(p.to_dense(amb));
        }
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (shifted.add(ideal().basis()[k])) out.push_back(rows[k]);
    return out;
}

bool operator==(const WeilAlgebra& a, const WeilAlgebra& b) {
    return a.variables() == b.variables() && a.window() == b.window() && a.ideal() == b.ideal();
}

AlgebraInvariants invariants(const WeilAlgebra& a) {
    AlgebraInvariants inv;
    inv.dimension = a.dimension();
    inv.order = a.order();
    inv.width = a.width();
    inv.filtration = a.filtration();
    inv.derivation_dimension = derivation_space(a).tuples.dimension();
    return inv;
}

TensorProduct tensor_product(const WeilAlgebra& a, const WeilAlgebra& b) {
    const std::size_t n = a.variables() + b.variables();
    std::vector<Polynomial> relations;
    for (const auto& g : a.minimal_generators()) relations.push_back(g.embedded(n, 0));
    for (const auto& g : b.minimal_generators()) relations.push_back(g.embedded(n, a.variables()));
    TensorProduct t{WeilAlgebra::quotient(n, relations, a.order() + b.order()), {}, {}};
    ensure(t.algebra.dimension() == a.dimension() * b.dimension(), "tensor product dimension is multiplicative");
    for (const auto& ma : a.basis())
        for (const auto& mb : b.basis()) {
            std::vector<unsigned> e(ma.exponents());
            e.insert(e.end(), mb.exponents().begin(), mb.exponents().end());
            t.pair_to_quotient.push_back(t.algebra.reduce(Polynomial::monomial(t.algebra.window(), MultiIndex(e))));
        }
    const std::size_t d = t.algebra.dimension();
    std::vector<Vector> transposed(d, Vector(d));
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) transposed[q][p] = t.pair_to_quotient[p][q];
    t.quotient_to_pair = invert_matrix(transposed);
    return t;
}

std::vector<Vector> leibniz_constraints(const WeilAlgebra& a, const std::vector<Polynomial>& generators) {
    const std::size_t n = a.variables();
    const std::size_t dim = a.dimension();
    std::vector<Vector> rows;
    for (const auto& g : generators) {
        std::vector<std::vector<Vector>> mats;
        for (std::size_t i = 0; i < n; ++i) mats.push_back(a.multiplication_matrix(a.reduce(g.derivative(i))));
        for (std::size_t gamma = 0; gamma < dim; ++gamma) {
            Vector row(n * dim);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t b = 0; b < dim; ++b) row[i * dim + b] = mats[i][gamma][b];
            if (!is_zero(row)) rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<Vector> derivation_images(const WeilAlgebra& a, const Vector& tuple) {
    const std::size_t n = a.variables();
    const std::size_t dim = a.dimension();
    if (tuple.size() != n * dim) fail(ErrorKind::DimensionMismatch, "derivation tuple must lie in A^n");
    std::vector<Vector> images;
    for (const auto& m : a.basis()) {
        Vector img(dim);
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] == 0) continue;
            const Vector d(tuple.begin() + static_cast<long>(i * dim), tuple.begin() + static_cast<long>((i + 1) * dim));
            const Vector term = a.multiply(a.reduce(Polynomial::monomial(a.window(), m.lowered(i), m[i])), d);
            for (std::size_t k = 0; k < dim; ++k) img[k] += term[k];
        }
        images.push_back(std::move(img));
    }
    return images;
}

Vector apply_images(const std::vector<Vector>& images, const Vector& element) {
    if (images.size() != element.size()) fail(ErrorKind::DimensionMismatch, "element does not match the map");
    Vector out(images.empty() ? 0 : images.front().size());
    for (std::size_t a = 0; a < element.size(); ++a) {
        if (is_zero(element[a])) continue;
        for (std::size_t k = 0; k < out.size(); ++k)
            if (!is_zero(images[a][k])) out[k] += element[a] * images[a][k];
    }
    return out;
}

DerivationSpace derivation_space(const WeilAlgebra& a) {
    DerivationSpace ds;
    ds.tuples = nullspace(leibniz_constraints(a, a.minimal_generators()), a.variables() * a.dimension());
    for (const auto& t : ds.tuples.basis()) ds.images.push_back(derivation_images(a, t));
    return ds;
}

// ---------------------------------------------------------------------------

std::optional<Polynomial> AlgebraMorphism::witness(const WeilAlgebra& source, const WeilAlgebra& target,
                                                   const std::vector<Vector>& images) {
    for (const auto& g : source.minimal_generators())
        if (!is_zero(target.evaluate(g, images))) return g;
    return std::nullopt;
}

AlgebraMorphism::AlgebraMorphism(WeilAlgebra source, WeilAlgebra target, std::vector<Vector> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.variables())
        fail(ErrorKind::VariableCountMismatch, "a morphism needs one image per generator of the source");
    for (const auto& img : images_)
        if (img.size() != target_.dimension()) fail(ErrorKind::DimensionMismatch, "image does not match the target dimension");
    if (auto w = witness(source_, target_, images_))
        fail(ErrorKind::NotWellDefined, "relation " + format_polynomial(*w) + " of the source maps to a nonzero element");
    matrix_.assign(target_.dimension(), Vector(source_.dimension()));
    for (std::size_t a = 0; a < source_.dimension(); ++a) {
        const Vector img = target_.evaluate(Polynomial::monomial(source_.window(), source_.basis()[a]), images_);
        for (std::size_t g = 0; g < img.size(); ++g) matrix_[g][a] = img[g];
    }
}

Vector AlgebraMorphism::apply(const Vector& a) const {
    if (a.size() != source_.dimension()) fail(ErrorKind::DimensionMismatch, "element does not match the source dimension");
    return weiljets::apply(matrix_, a);
}

bool AlgebraMorphism::is_epimorphism() const {
    std::vector<Vector> rows(target_.maximal_power(2).basis());
    rows.insert(rows.end(), images_.begin(), images_.end());
    return Subspace::span(rows, target_.dimension()).dimension() == target_.maximal_power(1).dimension();
}

bool AlgebraMorphism::is_isomorphism() const {
    return source_.dimension() == target_.dimension() && is_epimorphism();
}

AlgebraMorphism AlgebraMorphism::after(const AlgebraMorphism& first) const {
    if (!(first.target() == source_)) fail(ErrorKind::AlgebraMismatch, "morphisms are not composable");
    std::vector<Vector> imgs;
    for (const auto& v : first.images()) imgs.push_back(apply(v));
    return AlgebraMorphism(first.source(), target_, std::move(imgs));
}

AlgebraMorphism factor_epimorphism(const AlgebraMorphism& alpha, const AlgebraMorphism& beta) {
    const WeilAlgebra& r = alpha.source();
    if (!(beta.source() == r) || !(beta.target() == alpha.target()))
        fail(ErrorKind::AlgebraMismatch, "both morphisms must share source and target");
    if (!r.is_truncated_ring()) fail(ErrorKind::AlgebraMismatch, "the source must be a truncated polynomial ring R_n^l");
    if (!alpha.is_epimorphism()) fail(ErrorKind::NotEpimorphism, "the first morphism is not an epimorphism");
    if (!beta.is_epimorphism()) fail(ErrorKind::NotEpimorphism, "the second morphism is not an epimorphism");
    const std::size_t n = r.variables();
    const std::size_t dim = r.dimension();
    if (r.order() == 0) return AlgebraMorphism(r, r, beta.images());

    // Restrict alpha to the maximal ideal (basis indices 1 .. dim - 1).
    std::vector<Vector> restricted(alpha.matrix().size());
    for (std::size_t g = 0; g < restricted.size(); ++g)
        restricted[g].assign(alpha.matrix()[g].begin() + 1, alpha.matrix()[g].end());
    auto embed = [&](const Vector& tail) {
        Vector v(dim);
        std::copy(tail.begin(), tail.end(), v.begin() + 1);
        return v;
    };
    auto linear = [&](const Vector& v) { return Vector(v.begin() + 1, v.begin() + 1 + static_cast<long>(n)); };

    std::vector<Vector> pre;
    for (const auto& b : beta.images()) {
        auto x = solve(restricted, b, dim - 1);
        ensure(x.has_value(), "an epimorphism reaches every element of the maximal ideal");
        pre.push_back(embed(*x));
    }
    std::vector<Vector> kernel;
    const Subspace kernel_tail = nullspace(restricted, dim - 1);
    for (const auto& k : kernel_tail.basis()) kernel.push_back(embed(k));
    std::vector<Vector> kernel_linear;
    for (const auto& k : kernel) kernel_linear.push_back(linear(k));
    const Subspace lin_ideal = Subspace::span(kernel_linear, n);

    // Ideal element with a prescribed linear part.
    std::vector<Vector> lin_rows(n, Vector(kernel.size()));
    for (std::size_t c = 0; c < kernel.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) lin_rows[i][c] = kernel_linear[c][i];
    auto ideal_element = [&](const Vector& lin) {
        auto coeffs = solve(lin_rows, lin, kernel.size());
        ensure(coeffs.has_value(), "linear part lies in L(I)");
        Vector v(dim);
        for (std::size_t c = 0; c < kernel.size(); ++c)
            for (std::size_t k = 0; k < dim; ++k) v[k] += (*coeffs)[c] * kernel[c][k];
        return v;
    };

    EchelonBuilder independent(n);
    for (const auto& u : lin_ideal.basis()) independent.add(u);
    std::vector<std::size_t> chosen, rest;
    for (std::size_t i = 0; i < n; ++i) (independent.add(linear(pre[i])) ? chosen : rest).push_back(i);
    ensure(rest.size() == lin_ideal.dimension(), "epimorphism images span m/m^2");

    std::vector<Vector> columns;
    for (std::size_t i : chosen) columns.push_back(linear(pre[i]));
    for (const auto& u : lin_ideal.basis()) columns.push_back(u);
    std::vector<Vector> system(n, Vector(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) system[i][c] = columns[c][i];
    for (std::size_t t = 0; t < rest.size(); ++t) {
        Vector& p = pre[rest[t]];
        auto coeffs = solve(system, linear(p), columns.size());
        ensure(coeffs.has_value(), "linear parts span R^n modulo L(I)");
        Vector k(n);
        for (std::size_t s = 0; s < lin_ideal.dimension(); ++s)
            for (std::size_t i = 0; i < n; ++i) k[i] += (*coeffs)[chosen.size() + s] * lin_ideal.basis()[s][i];
        const Vector remove = ideal_element(k);
        const Vector add = ideal_element(lin_ideal.basis()[t]);
        for (std::size_t j = 0; j < dim; ++j) p[j] += add[j] - remove[j];
    }

    AlgebraMorphism g(r, r, pre);
    ensure(alpha.after(g).images() == beta.images(), "beta = alpha o g");
    std::vector<Vector> lin;
    for (const auto& p : pre) lin.push_back(linear(p));
    ensure(Subspace::span(lin, n).dimension() == n, "g has invertible linear part");
    return g;
}

Subspace generated_ideal(const WeilAlgebra& a, const std::vector<Vector>& generators) {
    EchelonBuilder builder(a.dimension());
    std::deque<Vector> pending(generators.begin(), generators.end());
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < a.variables(); ++i) gens.push_back(a.generator(i));
    while (!pending.empty()) {
        Vector v = std::move(pending.front());
        pending.pop_front();
        if (v.size() != a.dimension()) fail(ErrorKind::DimensionMismatch, "element does not match the algebra dimension");
        if (!builder.add(v)) continue;
        for (const auto& g : gens) pending.push_back(a.multiply(g, v));
    }
    return builder.finish();
}

StabilityReport ideal_stability(const WeilAlgebra& a, const Subspace& ideal, const std::vector<AlgebraMorphism>& automorphisms) {
    const std::size_t dim = a.dimension();
    if (ideal.ambient_dimension() != dim) fail(ErrorKind::DimensionMismatch, "ideal does not live in the algebra");
    for (const auto& v : ideal.basis())
        for (std::size_t i = 0; i < a.variables(); ++i)
            if (!ideal.contains(a.multiply(a.generator(i), v)))
                fail(ErrorKind::NotAnIdeal, "subspace is not closed under multiplication by the generators");

    StabilityReport report;
    report.quotient_dimension = dim - ideal.dimension();
    const DerivationSpace ders = derivation_space(a);
    report.der_stable = true;
    for (const auto& images : ders.images)
        for (const auto& v : ideal.basis())
            if (!ideal.contains(apply_images(images, v))) report.der_stable = false;

    for (const auto& g : automorphisms) {
        if (!(g.source() == a) || !(g.target() == a)) fail(ErrorKind::AlgebraMismatch, "automorphism must act on the algebra");
        if (!g.is_isomorphism()) fail(ErrorKind::NotEpimorphism, "supplied morphism is not an automorphism");
        report.automorphism_stable.push_back(image(g.matrix(), ideal, dim) == ideal);
    }

    if (report.der_stable) {
        const auto free = ideal.free_columns();
        std::vector<Vector> flat;
        for (const auto& images : ders.images) {
            std::vector<Vector> m(free.size(), Vector(free.size()));
            for (std::size_t c = 0; c < free.size(); ++c) {
                const Vector img = ideal.reduce(images[free[c]]);
                for (std::size_t r = 0; r < free.size(); ++r) m[r][c] = img[free[r]];
            }
            Vector f;
            for (const auto& row : m) f.insert(f.end(), row.begin(), row.end());
            flat.push_back(std::move(f));
            report.projected.push_back(std::move(m));
        }
        report.projected_dimension = Subspace::span(flat, free.size() * free.size()).dimension();
    }
    return report;
}

}  // namespace weiljets
