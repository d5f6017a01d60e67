#pragma once

#include "necklace/trace_calculus.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace necklace {

/// Polynomial algebra on named generators with a Poisson bracket given by
/// its values on generator pairs and extended by the Leibniz rule.
/// Antisymmetry and the Jacobi identity on generator triples are checked
/// on construction.
class PoissonPolyAlgebra {
public:
    using Table = std::vector<std::vector<Polynomial>>;

    PoissonPolyAlgebra(std::vector<std::string> generators, Table table)
        : names_(std::move(generators)), table_(std::move(table))
    {
        const std::size_t n = names_.size();
        if (table_.size() != n)
            throw std::invalid_argument("structure table must be square in the generators");
        for (const auto& row : table_)
            if (row.size() != n)
                throw std::invalid_argument("structure table must be square in the generators");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (VarId v : variables(table_[i][j]))
                    if (v >= n)
                        throw std::invalid_argument("structure table uses an unknown generator");
                if (table_[i][j] != -table_[j][i])
                    throw std::invalid_argument("structure table is not antisymmetric at {" + names_.name(i) +
                                                ", " + names_.name(j) + "}");
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    if (!jacobiator(generator(i), generator(j), generator(k)).is_zero())
                        throw std::invalid_argument("structure table violates Jacobi at (" + names_.name(i) + ", " +
                                                    names_.name(j) + ", " + names_.name(k) + ")");
    }

    std::size_t size() const { return names_.size(); }
    const VariableNames& names() const { return names_; }
    const Table& table() const { return table_; }

    Polynomial generator(std::size_t i) const { return Polynomial::variable(static_cast<VarId>(i)); }
    Polynomial generator(std::string_view name) const { return names_(name); }
    Polynomial parse(std::string_view text) const { return names_.parse(text); }
    std::string format(const Polynomial& p) const { return names_.format(p); }

    /// Σ ∂f/∂a ∂g/∂b {a, b}.
    Polynomial poisson(const Polynomial& f, const Polynomial& g) const
    {
        Polynomial out;
        const std::vector<VarId> vf = variables(f), vg = variables(g);
        std::map<VarId, Polynomial> dg;
        for (VarId b : vg)
            dg.emplace(b, derivative(g, b));
        for (VarId a : vf) {
            const Polynomial da = derivative(f, a);
            for (VarId b : vg)
                if (!table_[a][b].is_zero())
                    out += da * dg.at(b) * table_[a][b];
        }
        return out;
    }

    Polynomial jacobiator(const Polynomial& f, const Polynomial& g, const Polynomial& h) const
    {
        return poisson(f, poisson(g, h)) + poisson(g, poisson(h, f)) + poisson(h, poisson(f, g));
    }

    /// The same bracket in new generators. forward[k] writes new generator k
    /// in the old ones and inverse[i] writes old generator i in the new ones.
    PoissonPolyAlgebra change_generators(std::vector<std::string> new_names, const std::vector<Polynomial>& forward,
                                         const std::vector<Polynomial>& inverse) const
    {
        if (forward.size() != new_names.size() || inverse.size() != size())
            throw std::invalid_argument("change of generators has the wrong number of images");
        std::map<VarId, Polynomial> to_new;
        for (std::size_t i = 0; i < inverse.size(); ++i)
            to_new.emplace(static_cast<VarId>(i), inverse[i]);
        for (std::size_t k = 0; k < forward.size(); ++k)
            if (substitute(forward[k], to_new) != Polynomial::variable(static_cast<VarId>(k)))
                throw std::invalid_argument("change of generators is not invertible as given");
        Table t(forward.size(), std::vector<Polynomial>(forward.size()));
        for (std::size_t a = 0; a < forward.size(); ++a)
            for (std::size_t b = 0; b < forward.size(); ++b)
                t[a][b] = substitute(poisson(forward[a], forward[b]), to_new);
        return PoissonPolyAlgebra(std::move(new_names), std::move(t));
    }

    /// Quotient by (g - value) for a generator g that brackets to zero with
    /// everything; g is removed from the generator set.
    PoissonPolyAlgebra specialize(std::string_view name, const Rational& value) const
    {
        const VarId z = names_.id(name);
        for (std::size_t j = 0; j < size(); ++j)
            if (!table_[z][j].is_zero())
                throw std::invalid_argument("cannot specialize " + std::string(name) + ": it is not a Casimir");
        std::map<VarId, Polynomial> images;
        std::vector<std::string> kept;
        for (std::size_t i = 0, k = 0; i < size(); ++i) {
            if (i == z) {
                images.emplace(static_cast<VarId>(i), Polynomial(value));
            } else {
                images.emplace(static_cast<VarId>(i), Polynomial::variable(static_cast<VarId>(k++)));
                kept.push_back(names_.name(static_cast<VarId>(i)));
            }
        }
        Table t;
        for (std::size_t i = 0; i < size(); ++i) {
            if (i == z)
                continue;
            std::vector<Polynomial> row;
            for (std::size_t j = 0; j < size(); ++j)
                if (j != z)
                    row.push_back(substitute(table_[i][j], images));
            t.push_back(std::move(row));
        }
        return PoissonPolyAlgebra(std::move(kept), std::move(t));
    }

    friend bool operator==(const PoissonPolyAlgebra& a, const PoissonPolyAlgebra& b)
    {
        return a.names_.names() == b.names_.names() && a.table_ == b.table_;
    }

private:
    VariableNames names_;
    Table table_;
};

/// The trace ring of 2×2 matrices in x, x* with the induced bracket, on the
/// generators tr(x), tr(x*), tr(x^2), tr((x*)^2), tr(xx*).
inline PoissonPolyAlgebra table2_algebra()
{
    const TraceTable t2 = table2();
    std::vector<std::string> names;
    for (const Necklace& g : standard_trace_generators(1, 2))
        names.push_back(trace_symbol_name(Alphabet::symplectic(1), g.word()));
    PoissonPolyAlgebra::Table t(t2.size());
    for (std::size_t i = 0; i < t2.size(); ++i)
        for (const GeneratorExpression& e : t2[i]) {
            if (!e.in_generator_basis)
                throw std::logic_error("trace table left the generator basis");
            t[i].push_back(e.poly);
        }
    return PoissonPolyAlgebra(std::move(names), std::move(t));
}

/// S(sl2 ⋉ h) with h = <X, Y, Z> Heisenberg, {X,Y} = Z, H acting on X, Y
/// with weights 1, -1, E·Y = X, F·X = Y. Generators X, Y, Z, E, F, H.
inline PoissonPolyAlgebra sl2_heisenberg_symmetric_algebra()
{
    const VariableNames n({"X", "Y", "Z", "E", "F", "H"});
    std::vector<std::vector<Polynomial>> t(6, std::vector<Polynomial>(6));
    const auto set = [&](const char* a, const char* b, const Polynomial& v) {
        t[n.id(a)][n.id(b)] = v;
        t[n.id(b)][n.id(a)] = -v;
    };
    set("X", "Y", n("Z"));
    set("H", "E", Rational(2) * n("E"));
    set("H", "F", Rational(-2) * n("F"));
    set("E", "F", n("H"));
    set("H", "X", n("X"));
    set("H", "Y", -n("Y"));
    set("E", "Y", n("X"));
    set("F", "X", n("Y"));
    return PoissonPolyAlgebra(n.names(), std::move(t));
}

/// The quotient by Z - 2, generators X, Y, E, F, H.
inline PoissonPolyAlgebra sl2_heisenberg_algebra()
{
    return sl2_heisenberg_symmetric_algebra().specialize("Z", 2);
}

/// The Table 2 algebra rewritten in X = tr(x*), Y = -tr(x),
/// E = tr((x*)^2)/2, F = -tr(x^2)/2, H = tr(xx*).
inline PoissonPolyAlgebra table2_in_sl2_coordinates()
{
    const auto v = [](VarId k) { return Polynomial::variable(k); };
    // tr(x) = -Y, tr(x*) = X, tr(x^2) = -2F, tr((x*)^2) = 2E, tr(xx*) = H
    const std::vector<Polynomial> inverse{-v(1), v(0), Rational(-2) * v(3), Rational(2) * v(2), v(4)};
    return table2_algebra().change_generators({"X", "Y", "E", "F", "H"}, sl2_heisenberg_coordinates(), inverse);
}

/// Poisson bracket on the entries of n×n representation matrices induced by
/// a double bracket: {a_ij, b_uv} = Σ c·P_uj·Q_iv over the terms c·p⊗q of
/// {{a, b}}, P and Q the matrices of p and q.
inline PoissonPolyAlgebra representation_space_algebra(const BracketRule& rule, int n)
{
    if (!rule.alphabet().is_symplectic())
        throw std::invalid_argument("representation_space_algebra expects a symplectic alphabet");
    const GenericMatrices g = generic_matrices(rule.alphabet().pairs(), n);
    const auto N = static_cast<std::size_t>(n);
    const std::size_t vars = g.names.size();
    std::vector<std::vector<Polynomial>> t(vars, std::vector<Polynomial>(vars));
    const auto var = [&](std::size_t letter, std::size_t i, std::size_t j) { return letter * N * N + i * N + j; };
    const auto& letters = g.alphabet.letters();
    for (std::size_t la = 0; la < letters.size(); ++la)
        for (std::size_t lb = 0; lb < letters.size(); ++lb) {
            const TensorElement& db = rule.on_generators(letters[la], letters[lb]);
            for (const auto& [pq, c] : db) {
                const Matrix<Polynomial> P = word_matrix(pq.first, g.alphabet, g.mats);
                const Matrix<Polynomial> Q = word_matrix(pq.second, g.alphabet, g.mats);
                for (std::size_t i = 0; i < N; ++i)
                    for (std::size_t j = 0; j < N; ++j)
                        for (std::size_t u = 0; u < N; ++u)
                            for (std::size_t v = 0; v < N; ++v)
                                t[var(la, i, j)][var(lb, u, v)] += c * P(u, j) * Q(i, v);
            }
        }
    return PoissonPolyAlgebra(g.names.names(), std::move(t));
}

struct BracketRelation {
    std::string label;
    Polynomial expected;
    Polynomial actual;
    bool holds() const { return expected == actual; }
};

struct CoordinateChangeReport {
    PoissonPolyAlgebra primed; // generators X', Y', E', F', H'
    std::vector<BracketRelation> relations;
    bool ok() const
    {
        for (const auto& r : relations)
            if (!r.holds())
                return false;
        return true;
    }
};

/// The sl2 ⋉ h algebra at Z = 2 in the primed coordinates
/// H' = H + XY/2, E' = E - X^2/4, F' = F + Y^2/4, X' = X, Y' = Y.
/// Checks the nine decoupling relations and {X', Y'} = 2.
inline CoordinateChangeReport change_coordinates()
{
    const PoissonPolyAlgebra base = sl2_heisenberg_algebra();
    const auto v = [](VarId k) { return Polynomial::variable(k); };
    const Rational q(1, 4), h(1, 2);
    // X = X', Y = Y', E = E' + X'^2/4, F = F' - Y'^2/4, H = H' - X'Y'/2
    const std::vector<Polynomial> inverse{v(0), v(1), v(2) + q * v(0) * v(0), v(3) - q * v(1) * v(1),
                                          v(4) - h * v(0) * v(1)};
    PoissonPolyAlgebra primed = base.change_generators({"X'", "Y'", "E'", "F'", "H'"}, primed_coordinates(), inverse);
    const auto br = [&](std::size_t a, std::size_t b) { return primed.table()[a][b]; };
    enum { X, Y, E, F, H };
    std::vector<BracketRelation> rel{
        {"{H',E'} = 2E'", Rational(2) * v(E), br(H, E)},
        {"{H',F'} = -2F'", Rational(-2) * v(F), br(H, F)},
        {"{E',F'} = H'", v(H), br(E, F)},
        {"{H',X'} = 0", {}, br(H, X)},
        {"{H',Y'} = 0", {}, br(H, Y)},
        {"{E',X'} = 0", {}, br(E, X)},
        {"{E',Y'} = 0", {}, br(E, Y)},
        {"{F',X'} = 0", {}, br(F, X)},
        {"{F',Y'} = 0", {}, br(F, Y)},
        {"{X',Y'} = 2", Polynomial(2), br(X, Y)},
    };
    return {std::move(primed), std::move(rel)};
}

/// {c, g} for c = H'^2 + 4E'F' and every generator g of the Z = 2 algebra,
/// plus {c^2, E}.
inline std::vector<BracketRelation> casimir_check()
{
    const PoissonPolyAlgebra a = sl2_heisenberg_algebra();
    const Polynomial c = sl2_casimir();
    std::vector<BracketRelation> out;
    for (std::size_t g = 0; g < a.size(); ++g)
        out.push_back({"{c, " + a.names().name(static_cast<VarId>(g)) + "} = 0", {}, a.poisson(c, a.generator(g))});
    out.push_back({"{c^2, E} = 0", {}, a.poisson(c * c, a.generator("E"))});
    return out;
}

} // namespace necklace
