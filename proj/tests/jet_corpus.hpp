#pragma once

// Jets shared by the jet_spectrum unit suite and the acceptance runner.

#include <string>
#include <vector>

#include "test_support.hpp"
#include "weiljets/jet.hpp"

namespace weiljets::testing {

struct CorpusJet {
    std::string name;
    Jet jet;
};

inline Jet jet_at(std::size_t n, const Vector& base, std::vector<const char*> gens, unsigned hint) {
    std::vector<Polynomial> g;
    for (auto* t : gens) g.push_back(poly(t, n));
    return jet_from_ideal(n, base, g, hint);
}

inline Jet jet0(std::size_t n, std::vector<const char*> gens, unsigned hint) {
    return jet_at(n, Vector(n), std::move(gens), hint);
}

/// m^(l+1) at the origin of R^n.
inline Jet power_jet(std::size_t n, unsigned l) { return classical_jet(n, Vector(n), {}, l); }

/// Classical jet of a random graph: the last n - m coordinates are polynomial
/// functions (degree 1 .. l) of the first m, at a random point of the graph.
inline Jet random_classical(Rng& rng, std::size_t n, std::size_t m, unsigned l) {
    Vector base(n);
    for (std::size_t i = 0; i < m; ++i) base[i] = rng.integer(-2, 2);
    std::vector<std::pair<std::size_t, Polynomial>> graph;
    for (std::size_t j = m; j < n; ++j) {
        Polynomial f = rng.polynomial(m, 1, l, 3);
        Polynomial lifted = f.embedded(n, 0);
        Vector shift(n);
        for (std::size_t i = 0; i < m; ++i) shift[i] = -base[i];
        lifted = translate(lifted, shift);
        base[j] = evaluate_at(lifted, base);
        graph.emplace_back(j, lifted);
    }
    return classical_jet(n, base, graph, l);
}

inline std::vector<CorpusJet> jet_corpus() {
    std::vector<CorpusJet> c;
    c.push_back({"m in R^1", jet0(1, {"x"}, 1)});
    c.push_back({"m in R^3", jet0(3, {"x", "y", "z"}, 1)});
    c.push_back({"(y)+m^2", jet0(2, {"y"}, 1)});
    c.push_back({"(y)+m^3", jet0(2, {"y"}, 2)});
    c.push_back({"(y-x^2)+m^3", jet0(2, {"y - x^2"}, 2)});
    c.push_back({"(y+x^2)+m^3", jet0(2, {"y + x^2"}, 2)});
    c.push_back({"(z,x^2)+m^3", jet0(3, {"z", "x^2"}, 2)});
    c.push_back({"(x^2,y^2)", jet0(2, {"x^2", "y^2"}, 2)});
    c.push_back({"(xy)+m^3", jet0(2, {"x y"}, 2)});
    c.push_back({"(z,x^2,y^3)+m^4", jet0(3, {"z - x y", "x^2", "y^3"}, 3)});
    c.push_back({"(y-x^2, z-x^3) at (1,1,1)", jet_at(3, {1, 1, 1}, {"y - x^2", "z - x^3"}, 3)});
    for (std::size_t n = 1; n <= 3; ++n)
        for (unsigned l = 1; l <= 3; ++l)
            c.push_back({"m^" + std::to_string(l + 1) + " in R^" + std::to_string(n), power_jet(n, l)});
    Rng rng(20260);
    const std::size_t shapes[][3] = {{2, 1, 1}, {2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {3, 2, 2}, {3, 1, 3},
                                     {3, 2, 3}, {4, 1, 3}, {4, 2, 2}, {4, 3, 2}, {4, 2, 3}};
    for (const auto& s : shapes)
        c.push_back({"classical n=" + std::to_string(s[0]) + " m=" + std::to_string(s[1]) + " l=" + std::to_string(s[2]),
                     random_classical(rng, s[0], s[1], static_cast<unsigned>(s[2]))});
    return c;
}

}  // namespace weiljets::testing
