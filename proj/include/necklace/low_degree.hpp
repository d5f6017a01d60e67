#pragma once

#include "necklace/poisson_poly.hpp"
#include "necklace/sl2_module.hpp"

#include <set>
#include <string>
#include <vector>

namespace necklace {

struct LowDegreeReport {
    int d = 0;
    std::size_t dim_degree2 = 0;
    std::vector<IdentityCheck> checks;
    bool ok() const
    {
        for (const auto& c : checks)
            if (!c.holds)
                return false;
        return true;
    }
};

/// Canonical Poisson bracket on C[x_1, x_1*, ..., x_d, x_d*] with
/// {x_i, x_i*} = 1, variables in alphabet order.
inline PoissonPolyAlgebra symplectic_polynomial_algebra(int d)
{
    const Alphabet a = Alphabet::symplectic(d);
    std::vector<std::string> names;
    for (Letter l : a.letters())
        names.push_back(a.name(l));
    PoissonPolyAlgebra::Table t(names.size(), std::vector<Polynomial>(names.size()));
    for (std::size_t i = 0; i + 1 < names.size(); i += 2) {
        t[i][i + 1] = Polynomial(1);
        t[i + 1][i] = Polynomial(-1);
    }
    return PoissonPolyAlgebra(std::move(names), std::move(t));
}

/// Structure of the necklace Lie algebra in degrees 0, 1, 2 for d pairs:
/// Heisenberg relations in degree <= 1, degree 2 compared with quadratic
/// polynomials under the abelianization map, and the action of degree 2
/// on degree <= 1.
inline LowDegreeReport check_low_degree_structure(int d)
{
    const BracketRule rule = BracketRule::canonical(d);
    const Alphabet& a = rule.alphabet();
    const PoissonPolyAlgebra poly = symplectic_polynomial_algebra(d);
    const auto phi = [&](const NecklaceElement& e) { return to_trace_generators(e, d, 1).poly; };
    const auto br = [&](const Necklace& u, const Necklace& v) {
        return necklace_bracket(rule, NecklaceElement::term(u), NecklaceElement::term(v));
    };

    LowDegreeReport r;
    r.d = d;
    const std::vector<Necklace> deg0 = enumerate_necklaces(a, 0);
    const std::vector<Necklace> deg1 = enumerate_necklaces(a, 1);
    const std::vector<Necklace> deg2 = enumerate_necklaces(a, 2);
    r.dim_degree2 = deg2.size();

    // Heisenberg: {x_i, x_j*} = δ_ij, letters of the same kind commute, 1 central.
    bool heis = true;
    const NecklaceElement one = NecklaceElement::term(deg0.front());
    for (const Necklace& u : deg1)
        for (const Necklace& v : deg1) {
            const Letter p = u.word()[0], q = v.word()[0];
            NecklaceElement expected;
            if (p.index == q.index && p.starred != q.starred)
                expected = p.starred ? -one : one;
            heis = heis && br(u, v) == expected;
        }
    bool central = true;
    for (const auto* basis : {&deg0, &deg1, &deg2})
        for (const Necklace& u : *basis)
            central = central && br(deg0.front(), u).is_zero();
    r.checks.push_back({"{x_i, x_j*} = delta_ij * 1 and letters of one kind commute", heis});
    r.checks.push_back({"1 is central in degrees <= 2", central});

    // Abelianization is a bijection from degree 2 onto quadratic monomials.
    std::set<Monomial> images;
    bool monomial = true;
    for (const Necklace& u : deg2) {
        const Polynomial p = phi(NecklaceElement::term(u));
        monomial = monomial && p.size() == 1 && p.begin()->second == 1;
        images.insert(p.begin()->first);
    }
    const std::size_t m = a.size();
    r.checks.push_back({"abelianization is bijective in degree 2 (dim " + std::to_string(deg2.size()) + ")",
                        monomial && images.size() == deg2.size() && deg2.size() == m * (m + 1) / 2});

    // Degree 2 brackets match the polynomial Poisson bracket.
    bool sp = true, closed = true;
    for (const Necklace& u : deg2)
        for (const Necklace& v : deg2) {
            const NecklaceElement b = br(u, v);
            for (const auto& [w, c] : b)
                closed = closed && w.degree() == 2;
            sp = sp && phi(b) == poly.poisson(phi(NecklaceElement::term(u)), phi(NecklaceElement::term(v)));
        }
    r.checks.push_back({"degree 2 is closed under the bracket", closed});
    r.checks.push_back({"degree 2 brackets equal quadratic Poisson brackets", sp});

    // Semidirect action: degree 2 preserves degrees 0 and 1 and acts as
    // the polynomial bracket does.
    bool action = true;
    for (const Necklace& u : deg2)
        for (const auto* basis : {&deg0, &deg1})
            for (const Necklace& v : *basis) {
                const NecklaceElement b = br(u, v);
                for (const auto& [w, c] : b)
                    action = action && w.degree() == v.degree();
                action = action && phi(b) == poly.poisson(phi(NecklaceElement::term(u)), phi(NecklaceElement::term(v)));
            }
    r.checks.push_back({"degree 2 acts on degree <= 1 preserving degree", action});

    if (d == 1) {
        const Sl2Generators s = sl2_generators();
        r.checks.push_back({"{H, E} = 2E", necklace_bracket(rule, s.H, s.E) == Rational(2) * s.E});
        r.checks.push_back({"{H, F} = -2F", necklace_bracket(rule, s.H, s.F) == Rational(-2) * s.F});
        r.checks.push_back({"{E, F} = H", necklace_bracket(rule, s.E, s.F) == s.H});
    }
    return r;
}

} // namespace necklace
