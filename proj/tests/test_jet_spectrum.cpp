#include <doctest.h>

#include <set>

#include "jet_corpus.hpp"
#include "test_support.hpp"
#include "weiljets/error.hpp"
#include "weiljets/jet.hpp"

using namespace weiljets;
using namespace weiljets::testing;

namespace {

std::set<std::vector<unsigned>> basis_monomials(const WeilAlgebra& a) {
    std::set<std::vector<unsigned>> out;
    for (const auto& m : a.basis()) out.insert(m.exponents());
    return out;
}

Jet maximal_jet(std::size_t n) {
    std::vector<Polynomial> coords;
    for (std::size_t i = 0; i < n; ++i) coords.push_back(Polynomial::variable(n, 1, i));
    return jet_from_ideal(n, Vector(n), coords, 1);
}

// For an ideal spanned by monomials: the monomials of the next window that lie
// in p and whose partial derivatives all stay in p.
Subspace monomial_hat(const Jet& p) {
    const std::size_t n = p.ambient_dimension();
    const unsigned w = p.window() + 1;
    const MonomialBasis& big = monomial_basis(n, w);
    auto in_p = [&](const MultiIndex& m) { return p.contains(Polynomial::monomial(w, m)); };
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < big.size(); ++j) {
        if (!in_p(big[j])) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i)
            if (big[j][i] > 0 && !in_p(big[j].lowered(i))) ok = false;
        if (ok) keep.push_back(j);
    }
    return Subspace::coordinate(keep, big.size());
}

std::size_t homogeneous_count(std::size_t n, unsigned d) {
    std::size_t count = 0;
    std::vector<unsigned> e(n, 0);
    for (;;) {
        unsigned s = 0;
        for (auto x : e) s += x;
        if (s == d) ++count;
        std::size_t i = 0;
        while (i < n && e[i] == d) e[i++] = 0;
        if (i == n) break;
        ++e[i];
    }
    return count;
}

std::vector<Polynomial> polys(std::size_t n, std::vector<const char*> texts) {
    std::vector<Polynomial> out;
    for (auto* t : texts) out.push_back(poly(t, n));
    return out;
}

// The A-span of one field value together with Der(A, A), inside A^n.
Subspace module_span(const Jet& p, const Vector& value, const Subspace& relations) {
    const WeilAlgebra& a = p.algebra();
    const std::size_t d = a.dimension();
    const std::size_t n = p.ambient_dimension();
    std::vector<Vector> rows(relations.basis());
    for (std::size_t k = 0; k < d; ++k) {
        Vector e(d);
        e[k] = 1;
        Vector row;
        for (std::size_t i = 0; i < n; ++i) {
            const Vector part(value.begin() + static_cast<long>(i * d), value.begin() + static_cast<long>((i + 1) * d));
            const Vector prod = a.multiply(e, part);
            row.insert(row.end(), prod.begin(), prod.end());
        }
        rows.push_back(row);
    }
    return Subspace::span(rows, n * d);
}

}  // namespace

TEST_CASE("jet_from_ideal: the maximal ideal of the line") {
    const Jet p = jet0(1, {"x"}, 2);
    CHECK(p.order() == 0);
    CHECK(p.width() == 0);
    CHECK(p.algebra().dimension() == 1);
    CHECK(p.contains(poly("x", 1)));
    CHECK_FALSE(p.contains(poly("1", 1)));
}

TEST_CASE("jet_from_ideal: the parabola 2-jet") {
    const Jet p = jet0(2, {"y - x^2"}, 2);
    CHECK(p.order() == 2);
    CHECK(p.width() == 1);
    CHECK(p.algebra().dimension() == 3);
    CHECK(basis_monomials(p.algebra()) == std::set<std::vector<unsigned>>{{0, 0}, {1, 0}, {2, 0}});
    const WeilAlgebra& a = p.algebra();
    CHECK(a.reduce(poly("y", 2)) == a.reduce(poly("x^2", 2)));
    CHECK(is_zero(a.reduce(poly("x y", 2))));
    CHECK(is_zero(a.reduce(poly("x^3", 2))));
    CHECK(p.is_classical());
}

TEST_CASE("jet_from_ideal: a non-classical jet in R^3") {
    const Jet p = jet0(3, {"z", "x^2"}, 2);
    const WeilAlgebra& a = p.algebra();
    CHECK(p.order() == 2);
    CHECK(p.width() == 2);
    CHECK(a.dimension() == 5);
    CHECK(basis_monomials(a) ==
          std::set<std::vector<unsigned>>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 2, 0}});
    CHECK_FALSE(p.is_classical());
    // filtration by brute-force products of the coordinate classes
    std::vector<Vector> m1{a.generator(0), a.generator(1), a.generator(2)};
    std::vector<Vector> m2;
    for (const auto& u : m1)
        for (const auto& v : m1) m2.push_back(a.multiply(u, v));
    std::vector<Vector> m3;
    for (const auto& u : m2)
        for (const auto& v : m1) m3.push_back(a.multiply(u, v));
    CHECK(Subspace::span(m2, 5).dimension() == 2);
    CHECK(Subspace::span(m3, 5).dimension() == 0);
    CHECK(a.filtration() == std::vector<std::size_t>{4, 2, 0});
}

TEST_CASE("jet_from_ideal: errors") {
    try {
        jet0(1, {"x - 1"}, 2);
        FAIL("expected EmptyQuotient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyQuotient);
    }
    try {
        jet0(1, {"x^3"}, 2);
        FAIL("expected HintTooSmall");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HintTooSmall);
    }
}

TEST_CASE("jet_from_ideal: base points are translated") {
    const Jet p = jet_at(2, {2, 4}, {"y - x^2"}, 2);
    CHECK(p.base_point() == Vector{2, 4});
    // centred: (y+4) - (x+2)^2 = y - 4x - x^2
    CHECK(p.contains(poly("y - 4 x - x^2", 2)));
    CHECK(p.algebra().dimension() == 3);
    for (const auto& g : p.generators_at_point()) CHECK(evaluate_at(g, {2, 4}) == 0);
}

TEST_CASE("classical_jet examples") {
    const Jet line = classical_jet(2, {0, 0}, {{1, Polynomial(2, 1)}}, 1);
    CHECK(line == jet0(2, {"y"}, 1));
    CHECK(invariants(line.algebra()) == invariants(WeilAlgebra::truncated(1, 1)));
    CHECK(line.built_as_classical());

    const Jet parabola = classical_jet(2, {0, 0}, {{1, poly("x^2", 2)}}, 2);
    CHECK(parabola == jet0(2, {"y - x^2"}, 2));

    const Jet whole = classical_jet(1, {0}, {}, 2);
    CHECK(whole.ideal() == saturate_ideal(1, 3, {}));
    CHECK(whole.algebra().dimension() == 3);
    CHECK(whole.built_as_classical());
}

TEST_CASE("hat_ideal examples") {
    for (std::size_t n = 1; n <= 3; ++n) {
        CHECK(hat_ideal(maximal_jet(n)) == power_jet(n, 1));
        for (unsigned l = 1; l <= 3; ++l) CHECK(hat_ideal(power_jet(n, l)) == power_jet(n, l + 1));
    }
    // (y)+m^2: f = a y + q with q in m^2; d_y f in p forces a = 0, and
    // d_x q, d_y q in (y)+m^2 leave only y^2 in degree 2.
    const Jet p = jet0(2, {"y"}, 1);
    const Jet h = hat_ideal(p);
    CHECK(h == jet0(2, {"y^2"}, 2));
    CHECK(h.ideal() == monomial_hat(p));
}

TEST_CASE("hat_ideal agrees with the monomial brute force") {
    for (const char* name : {"(x^2,y^2)", "(z,x^2)+m^3", "(xy)+m^3", "(y)+m^3"})
        for (const auto& c : jet_corpus())
            if (c.name == name) CHECK_MESSAGE(hat_ideal(c.jet).ideal() == monomial_hat(c.jet), name);
}

TEST_CASE("p^2 in hat(p) in p over the corpus") {
    for (const auto& c : jet_corpus()) {
        const Jet h = hat_ideal(c.jet);
        CHECK_MESSAGE(ideal_contains(c.jet, h), c.name);
        const auto gens = c.jet.algebra().minimal_generators();
        for (const auto& f : gens)
            for (const auto& g : gens) CHECK_MESSAGE(h.contains(exact_product(f, g)), c.name);
    }
}

TEST_CASE("tangent_module examples") {
    for (std::size_t n = 1; n <= 3; ++n) CHECK(tangent_module(maximal_jet(n)).dimension == n);
    const TangentModule t = tangent_module(power_jet(1, 2));
    CHECK(t.ambient_dimension == 3);
    CHECK(t.relations.dimension() == 2);
    CHECK(t.dimension == 1);
    const TangentModule u = tangent_module(jet0(2, {"y"}, 1));
    CHECK(u.ambient_dimension == 4);
    CHECK(u.relations.dimension() == 1);
    CHECK(u.dimension == 3);
}

TEST_CASE("value_of_field") {
    const Jet p = jet0(2, {"y"}, 1);
    // A = R[x]/(x^2) with basis 1, x
    CHECK(value_of_field(p, polys(2, {"1", "0"})) == Vector{1, 0, 0, 0});
    CHECK(value_of_field(p, polys(2, {"x + y", "3 + x"})) == Vector{0, 1, 3, 1});
}

TEST_CASE("cotangent_module examples") {
    for (std::size_t n = 1; n <= 3; ++n) {
        CHECK(cotangent_module(maximal_jet(n)).dimension == n);
        for (unsigned l = 1; l <= 3; ++l) CHECK(cotangent_module(power_jet(n, l)).dimension == homogeneous_count(n, l + 1));
    }
    // p / p-hat for (y)+m^2 is spanned by y, x^2, x y
    const Jet p = jet0(2, {"y"}, 1);
    const CotangentModule c = cotangent_module(p);
    CHECK(c.dimension == 3);
    const Jet h = hat_ideal(p);
    const MonomialBasis& big = monomial_basis(2, 3);
    std::vector<Vector> mine, expected;
    for (const auto& f : c.basis) mine.push_back(f.with_bound(3).to_dense(big));
    for (auto* t : {"y", "x^2", "x y"}) expected.push_back(poly(t, 2).with_bound(3).to_dense(big));
    CHECK(sum(Subspace::span(mine, big.size()), h.ideal_in_window(3)) ==
          sum(Subspace::span(expected, big.size()), h.ideal_in_window(3)));
}

TEST_CASE("differential") {
    const Jet p = jet0(2, {"y"}, 1);
    CHECK(differential(p, poly("y", 2), {1, 2, 3, 4}) == Vector{3, 4});
    CHECK(differential(p, poly("x^2", 2), {1, 2, 3, 4}) == Vector{0, 2});
    try {
        differential(p, poly("x", 2), {1, 0, 0, 0});
        FAIL("expected FNotInIdeal");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FNotInIdeal);
    }
}

TEST_CASE("differential vanishes on relations and on hat(p)") {
    Rng rng(41);
    for (const auto& c : jet_corpus()) {
        const Jet& p = c.jet;
        const TangentModule t = tangent_module(p);
        const std::size_t n = p.ambient_dimension();
        const auto gens = p.algebra().minimal_generators();
        for (const auto& f : gens)
            for (const auto& r : t.relations.basis()) CHECK_MESSAGE(is_zero(differential(p, f, r)), c.name);
        const Jet h = hat_ideal(p);
        for (const auto& f : h.algebra().minimal_generators()) {
            const Vector v = rng.vector(n * p.algebra().dimension());
            CHECK_MESSAGE(is_zero(differential(p, f.with_bound(p.window()), v)), c.name);
        }
    }
}

TEST_CASE("jet_fields examples") {
    // m^(l+1): exactly the fields with coefficients in m
    for (std::size_t n = 1; n <= 3; ++n)
        for (unsigned l = 1; l <= 3; ++l) {
            const std::size_t s = monomial_basis(n, l).size();
            std::vector<std::size_t> nonconstant;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 1; k < s; ++k) nonconstant.push_back(i * s + k);
            CHECK(jet_fields(power_jet(n, l)) == Subspace::coordinate(nonconstant, n * s));
        }
    // m: fields vanishing at the point; in the order-0 window that is zero
    CHECK(jet_fields(jet0(2, {"x", "y"}, 1)).is_zero());
    // (y)+m^2 with coefficients in 1, x, y: x d/dx, y d/dx, y d/dy
    const Jet p = jet0(2, {"y"}, 1);
    CHECK(jet_fields(p) == Subspace::coordinate({1, 2, 5}, 6));
    const Subspace d_x = Subspace::coordinate({0}, 6);
    CHECK_FALSE(fields_preserve(d_x, 2, 1, p));
    CHECK(fields_preserve(jet_fields(p), 2, 1, p));
}

TEST_CASE("normal_form examples") {
    const NormalForm a = normal_form(jet0(2, {"y - x^2"}, 2));
    CHECK(a.y_variables == std::vector<std::size_t>{1});
    CHECK(a.x_variables == std::vector<std::size_t>{0});
    CHECK(a.tau[1] == poly("y - x^2", 2));
    CHECK(a.sigma[1] == poly("y + x^2", 2));
    CHECK(a.q_list.empty());
    CHECK(a.transformed == saturate_ideal(2, 3, polys(2, {"y"})));

    const NormalForm b = normal_form(jet0(3, {"z", "x^2"}, 2));
    CHECK(b.y_variables == std::vector<std::size_t>{2});
    for (std::size_t i = 0; i < 3; ++i) CHECK(b.sigma[i] == Polynomial::variable(3, 2, i));
    REQUIRE(b.q_list.size() == 1);
    CHECK(b.q_list[0] == poly("x^2", 3).with_bound(3));

    for (unsigned l = 1; l <= 3; ++l) {
        const NormalForm c = normal_form(power_jet(2, l));
        CHECK(c.y_variables.empty());
        CHECK(c.q_list.empty());
        for (std::size_t i = 0; i < 2; ++i) CHECK(c.sigma[i] == Polynomial::variable(2, l, i));
    }
}

TEST_CASE("derived_jet examples") {
    CHECK(derived_jet(jet0(2, {"y"}, 1)) == jet0(2, {"x", "y"}, 1));
    CHECK(derived_jet(jet0(3, {"x + y - z"}, 1)) == jet0(3, {"x", "y", "z"}, 1));
    for (std::size_t n = 1; n <= 3; ++n)
        for (unsigned l = 1; l <= 3; ++l) CHECK(derived_jet(power_jet(n, l)) == power_jet(n, l - 1));
    const Jet q = derived_jet(jet0(3, {"z", "x^2"}, 2));
    CHECK(q == jet0(3, {"z", "x"}, 1));
    CHECK(q.order() == 1);
    CHECK(q.width() == 1);
}

TEST_CASE("cartan_generation_oracle examples") {
    CHECK(cartan_generation_oracle(jet0(3, {"z", "x^2"}, 2)) == jet0(3, {"z", "x"}, 1));
    CHECK(cartan_generation_oracle(jet0(2, {"y"}, 2)) == jet0(2, {"y"}, 1));
    CHECK(cartan_generation_oracle(power_jet(1, 1)) == jet0(1, {"x"}, 1));
    CHECK(cartan_generation_oracle(power_jet(3, 3)) == power_jet(3, 2));
    CHECK(cartan_generation_oracle(jet0(2, {"y"}, 1)) == jet0(2, {"x", "y"}, 1));
}

TEST_CASE("derived_jet equals the generation oracle over the corpus") {
    for (const auto& c : jet_corpus()) {
        const Jet d = derived_jet(c.jet);
        CHECK_MESSAGE(d == cartan_generation_oracle(c.jet), c.name);
        CHECK_MESSAGE(ideal_contains(d, c.jet), c.name);
        if (c.jet.order() == 0) continue;
        const MonomialBasis& mb = monomial_basis(c.jet.ambient_dimension(), c.jet.order());
        for (std::size_t j = mb.degree_offset(c.jet.order()); j < mb.size(); ++j)
            CHECK_MESSAGE(d.contains(Polynomial::monomial(c.jet.order(), mb[j])), c.name);
    }
}

TEST_CASE("derived jets of order-1 jets are the maximal ideal") {
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
        const std::size_t r = static_cast<std::size_t>(rng.integer(0, static_cast<int>(n) - 1));
        std::vector<Polynomial> gens;
        for (std::size_t k = 0; k < r; ++k) gens.push_back(rng.polynomial(n, 1, 2, 4));
        const Vector base = rng.vector(n);
        std::vector<Polynomial> at_point;
        Vector minus(n);
        for (std::size_t i = 0; i < n; ++i) minus[i] = -base[i];
        for (const auto& g : gens) at_point.push_back(translate(g, minus));
        const Jet p = jet_from_ideal(n, base, at_point, 1);
        if (p.order() != 1) continue;
        std::vector<Polynomial> coords;
        for (std::size_t i = 0; i < n; ++i)
            coords.push_back(Polynomial::variable(n, 1, i) - Polynomial::constant(n, 1, base[i]));
        CHECK(derived_jet(p) == jet_from_ideal(n, base, coords, 1));
    }
}

TEST_CASE("fields tangent to p are tangent to p'") {
    for (const auto& c : jet_corpus()) {
        const Jet d = derived_jet(c.jet);
        CHECK_MESSAGE(fields_preserve(jet_fields(c.jet), c.jet.ambient_dimension(), c.jet.order(), d), c.name);
    }
}

TEST_CASE("contact_and_cartan examples") {
    const ContactData a = contact_and_cartan(jet0(2, {"y"}, 1));
    CHECK(a.rank == 1);
    CHECK(a.tangent_dimension == 3);
    CHECK(a.cartan_dimension == 2);
    CHECK(a.derived.algebra().dimension() == 1);

    for (std::size_t n = 1; n <= 3; ++n)
        for (unsigned l = 1; l <= 3; ++l) {
            const ContactData b = contact_and_cartan(power_jet(n, l));
            CHECK(b.omega.is_zero());
            CHECK(b.cartan.is_full());
            CHECK(b.cartan_dimension == b.tangent_dimension);
        }

    const ContactData c = contact_and_cartan(jet0(2, {"x^2", "y^2"}, 2));
    CHECK(c.cartan.is_full());
    CHECK(c.rank == 0);
}

TEST_CASE("contact identities over the corpus") {
    for (const auto& c : jet_corpus()) {
        const ContactData d = contact_and_cartan(c.jet);
        CHECK_MESSAGE(d.annihilator_identity, c.name);
        CHECK_MESSAGE(d.relations_projected, c.name);
        CHECK_MESSAGE(d.kernel_in_cartan, c.name);
        CHECK_MESSAGE(d.rank + d.cartan_dimension == d.tangent_dimension, c.name);
        for (const auto& w : d.omega.basis())
            for (const auto& v : d.cartan.basis()) CHECK(is_zero(dot(w, v)));
    }
}

TEST_CASE("taylor_map: the parabola") {
    const Jet p = jet0(2, {"y - x^2"}, 2);
    const TaylorData t = taylor_map(p);
    CHECK(t.derived == jet0(2, {"y"}, 1));
    CHECK(t.image_dimension == 1);
    CHECK(t.taylor_condition);
    // tangent module of the parabola at p': the field d/dx + 2x d/dy
    const Subspace tx = module_span(t.derived, value_of_field(t.derived, polys(2, {"1", "2 x"})),
                                    tangent_module(t.derived).relations);
    CHECK(t.image == tx);
}

TEST_CASE("taylor_map: an order-0 jet") {
    const Jet p = jet0(2, {"x", "y"}, 1);
    const TaylorData t = taylor_map(p);
    CHECK(t.derived == p);
    CHECK(t.image_dimension == 0);
    CHECK(t.taylor_condition);
}

TEST_CASE("taylor_map separates y = x^2 from y = -x^2") {
    const TaylorData a = taylor_map(jet0(2, {"y - x^2"}, 2));
    const TaylorData b = taylor_map(jet0(2, {"y + x^2"}, 2));
    CHECK(a.derived == b.derived);
    CHECK(a.taylor_condition);
    CHECK(b.taylor_condition);
    CHECK(a.image != b.image);
}

TEST_CASE("Taylor images equal tangent modules of graphs") {
    // y = f(x) with f of degree <= l: T_{p'}X is spanned by d/dx + f'(x) d/dy
    Rng rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        const unsigned l = static_cast<unsigned>(rng.integer(1, 3));
        const Polynomial f = rng.polynomial(1, 1, l, 3);
        const Polynomial lifted = f.embedded(2, 0);
        const Jet p = classical_jet(2, {0, 0}, {{1, lifted}}, l);
        const TaylorData t = taylor_map(p);
        const Polynomial df = lifted.derivative(0);
        const Subspace tx = module_span(t.derived, value_of_field(t.derived, {Polynomial::constant(2, 1, 1), df}),
                                        tangent_module(t.derived).relations);
        CHECK(t.image == tx);
        CHECK(t.taylor_condition);
    }
}

TEST_CASE("pushforward examples") {
    const std::vector<Polynomial> curve = polys(1, {"x", "x^2"});
    CHECK(pushforward(power_jet(1, 2), curve) == jet0(2, {"y - x^2"}, 2));

    const Jet at_one = jet_at(1, {1}, {}, 2);
    CHECK(pushforward(at_one, curve) == jet_at(2, {1, 1}, {"y - x^2"}, 2));

    for (const auto& c : jet_corpus()) {
        std::vector<Polynomial> id;
        for (std::size_t i = 0; i < c.jet.ambient_dimension(); ++i) id.push_back(Polynomial::variable(c.jet.ambient_dimension(), 1, i));
        CHECK_MESSAGE(pushforward(c.jet, id) == c.jet, c.name);
    }

    CHECK(pushforward(jet0(2, {"y"}, 1), polys(2, {"x"})) == power_jet(1, 1));
}

TEST_CASE("pushforward is functorial") {
    Rng rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        const Jet p = random_classical(rng, 2, 1, static_cast<unsigned>(rng.integer(1, 3)));
        std::vector<Polynomial> phi, psi;
        for (int j = 0; j < 2; ++j) phi.push_back(rng.polynomial(2, 0, 2, 4));
        for (int j = 0; j < 3; ++j) psi.push_back(rng.polynomial(2, 0, 2, 4));
        std::vector<Polynomial> composite;
        for (const auto& g : psi) composite.push_back(truncated_substitute(g, phi, 4));
        CHECK(pushforward(p, composite) == pushforward(pushforward(p, phi), psi));
    }
}

TEST_CASE("jet_from_ideal is idempotent") {
    for (const auto& c : jet_corpus()) {
        const Jet& p = c.jet;
        const Jet again = jet_from_ideal(p.ambient_dimension(), p.base_point(), p.generators_at_point(), p.order());
        CHECK_MESSAGE(again == p, c.name);
    }
}

TEST_CASE("tangent_map examples") {
    const TangentMap a = tangent_map(power_jet(1, 2), polys(1, {"x", "x^2"}));
    CHECK(a.exists);
    CHECK(a.regular);
    CHECK(a.image_jet == jet0(2, {"y - x^2"}, 2));

    const TangentMap b = tangent_map(power_jet(1, 2), polys(1, {"x^2"}));
    CHECK_FALSE(b.exists);
    CHECK_FALSE(b.regular);

    for (const auto& c : jet_corpus()) {
        const std::size_t n = c.jet.ambient_dimension();
        std::vector<Polynomial> id;
        for (std::size_t i = 0; i < n; ++i) id.push_back(Polynomial::variable(n, 1, i));
        const TangentMap t = tangent_map(c.jet, id);
        CHECK_MESSAGE(t.exists, c.name);
        CHECK_MESSAGE(t.regular, c.name);
        const std::size_t size = n * c.jet.algebra().dimension();
        REQUIRE(t.matrix.size() == size);
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t k = 0; k < size; ++k) CHECK(t.matrix[r][k] == (r == k ? 1 : 0));
    }
}

TEST_CASE("tangent_map sends derivative values to derivative values") {
    // for the embedding x -> (x, x^2) of m^3, the field d/dx maps to d/dx + 2x d/dy
    const Jet p = power_jet(1, 2);
    const TangentMap t = tangent_map(p, polys(1, {"x", "x^2"}));
    REQUIRE(t.exists);
    const Vector image = weiljets::apply(t.matrix, value_of_field(p, polys(1, {"1"})));
    const Vector expected = value_of_field(t.image_jet, polys(2, {"1", "2 x"}));
    const Subspace rel = tangent_module(t.image_jet).relations;
    Vector diff(image.size());
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = image[k] - expected[k];
    CHECK(rel.contains(diff));
}
