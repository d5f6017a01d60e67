#pragma once

#include "necklace/double_bracket.hpp"
#include "necklace/grammar.hpp"
#include "necklace/matrix.hpp"
#include "necklace/necklace_lie.hpp"
#include "necklace/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace necklace {

/// One n×n matrix of fresh indeterminates per letter of the symplectic
/// alphabet on d pairs. Entry (i,j) of letter "x*" is named "x*_ij".
struct GenericMatrices {
    Alphabet alphabet;
    VariableNames names;
    std::vector<Matrix<Polynomial>> mats; // indexed by alphabet code

    std::size_t size() const { return mats.empty() ? 0 : mats.front().size(); }
    const Matrix<Polynomial>& of(Letter l) const { return mats[alphabet.code(l)]; }
};

inline GenericMatrices generic_matrices(int d, int n)
{
    if (d < 1 || n < 1)
        throw std::invalid_argument("generic_matrices needs d, n >= 1");
    GenericMatrices g{Alphabet::symplectic(d), {}, {}};
    const auto N = static_cast<std::size_t>(n);
    for (Letter l : g.alphabet.letters()) {
        Matrix<Polynomial> m(N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                m(i, j) = Polynomial::variable(
                    g.names.add(g.alphabet.name(l) + "_" + std::to_string(i + 1) + std::to_string(j + 1)));
        g.mats.push_back(std::move(m));
    }
    return g;
}

template <class T>
Matrix<T> word_matrix(const Word& w, const Alphabet& alphabet, const std::vector<Matrix<T>>& mats)
{
    Matrix<T> m = Matrix<T>::identity(mats.at(0).size());
    for (Letter l : w)
        m = m * mats.at(alphabet.code(l));
    return m;
}

/// Σ c·tr(w) with the letters of w replaced by the given matrices; the
/// empty necklace evaluates to the matrix size.
template <class T>
T trace_of(const NecklaceElement& e, const Alphabet& alphabet, const std::vector<Matrix<T>>& mats)
{
    T out = T(0);
    for (const auto& [w, c] : e)
        out = out + T(c) * word_matrix(w.word(), alphabet, mats).trace();
    return out;
}

inline Polynomial trace_of(const NecklaceElement& e, const GenericMatrices& g)
{
    return trace_of(e, g.alphabet, g.mats);
}

/// "tr(x^2)", "tr((x*)^2)", "tr(xx*)": runs of a letter are written as powers.
inline std::string trace_symbol_name(const Alphabet& alphabet, const Word& w)
{
    if (w.size() == 0)
        return "tr(1)";
    std::string out = "tr(";
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        const std::string& nm = alphabet.name(w[i]);
        if (j - i == 1)
            out += nm;
        else if (nm.back() == '*')
            out += "(" + nm + ")^" + std::to_string(j - i);
        else
            out += nm + "^" + std::to_string(j - i);
        i = j;
    }
    return out + ")";
}

/// Polynomial in trace symbols tr(w); variable k stands for tr(symbols[k]).
struct GeneratorExpression {
    std::vector<Necklace> symbols;
    Polynomial poly;
    bool in_generator_basis = true;
};

inline VariableNames symbol_names(const Alphabet& alphabet, const std::vector<Necklace>& symbols)
{
    VariableNames names;
    for (const Necklace& s : symbols)
        names.add(trace_symbol_name(alphabet, s.word()));
    return names;
}

inline std::string format(const Alphabet& alphabet, const GeneratorExpression& e)
{
    return symbol_names(alphabet, e.symbols).format(e.poly);
}

/// Default generators of the trace ring used for rewriting: the letters for
/// n = 1, otherwise the traces of degree 1 and 2 with squares listed before
/// mixed words. For d = 1, n = 2 this is tr(x), tr(x*), tr(x^2),
/// tr((x*)^2), tr(xx*).
inline std::vector<Necklace> standard_trace_generators(int d, int n)
{
    const Alphabet a = Alphabet::symplectic(d);
    std::vector<Necklace> out;
    for (Letter l : a.letters())
        out.push_back(Necklace(Word{l}));
    if (n == 1)
        return out;
    for (Letter l : a.letters())
        out.push_back(Necklace(Word{l, l}));
    for (const Necklace& w : enumerate_necklaces(a, 2))
        if (w.word()[0] != w.word()[1])
            out.push_back(w);
    return out;
}

/// Image of a necklace element in the trace ring of n×n matrices, written in
/// standard_trace_generators(d, n). Higher traces at n >= 2 are kept as new
/// symbols and clear the in_generator_basis flag.
inline GeneratorExpression to_trace_generators(const NecklaceElement& e, int d, int n)
{
    const Alphabet a = Alphabet::symplectic(d);
    GeneratorExpression out{standard_trace_generators(d, n), {}, true};
    const auto symbol = [&](const Necklace& w) {
        for (std::size_t k = 0; k < out.symbols.size(); ++k)
            if (out.symbols[k] == w)
                return Polynomial::variable(static_cast<VarId>(k));
        out.in_generator_basis = false;
        out.symbols.push_back(w);
        return Polynomial::variable(static_cast<VarId>(out.symbols.size() - 1));
    };
    for (const auto& [w, c] : e) {
        Polynomial t(c);
        if (w.degree() == 0)
            t *= Rational(n);
        else if (n == 1)
            for (Letter l : w.word())
                t *= Polynomial::variable(static_cast<VarId>(a.code(l)));
        else
            t *= symbol(w);
        out.poly += t;
    }
    return out;
}

/// Trace-ring bracket of tr(a) and tr(b) for n×n matrices: the necklace
/// bracket followed by the trace map. At n = 1 this is the abelianization.
inline GeneratorExpression induced_bracket(const NecklaceElement& a, const NecklaceElement& b, int n, int d = 1)
{
    return to_trace_generators(necklace_bracket(BracketRule::canonical(d), a, b), d, n);
}

/// Substitutes the generic-matrix trace of every symbol.
inline Polynomial evaluate_on_generic(const GeneratorExpression& e, const GenericMatrices& g)
{
    std::map<VarId, Polynomial> images;
    for (std::size_t k = 0; k < e.symbols.size(); ++k)
        images.emplace(static_cast<VarId>(k), trace_of(NecklaceElement::term(e.symbols[k]), g));
    return substitute(e.poly, images);
}

using TraceTable = std::vector<std::vector<GeneratorExpression>>;

/// Brackets of the five generators of the trace ring of 2×2 matrices in
/// one pair x, x*.
inline TraceTable table2()
{
    const std::vector<Necklace> gens = standard_trace_generators(1, 2);
    TraceTable t(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            t[i].push_back(induced_bracket(NecklaceElement::term(gens[i]), NecklaceElement::term(gens[j]), 2));
    return t;
}

struct IdentityCheck {
    std::string label;
    bool holds = false;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool ok() const
    {
        for (const auto& c : checks)
            if (!c.holds)
                return false;
        return true;
    }
};

/// Powers of C = [x, x*] for 2×2 generic matrices:
/// tr(C^(2k)) = 2^(1-k) tr(C^2)^k and tr(C^(2k+1)) = 0 for 1 <= k <= nmax,
/// plus tr(C) = 0.
inline IdentityReport verify_cayley_hamilton(unsigned nmax)
{
    if (nmax > 3)
        throw std::length_error("verify_cayley_hamilton is limited to nmax <= 3");
    const GenericMatrices g = generic_matrices(1, 2);
    const Matrix<Polynomial>& x = g.mats[0];
    const Matrix<Polynomial>& xs = g.mats[1];
    const Matrix<Polynomial> c = x * xs - xs * x;
    std::vector<Polynomial> tr{Polynomial(2)};
    Matrix<Polynomial> p = Matrix<Polynomial>::identity(2);
    for (unsigned k = 1; k <= 2 * nmax + 1; ++k) {
        p = p * c;
        tr.push_back(p.trace());
    }
    IdentityReport r;
    r.checks.push_back({"tr(C) = 0", tr[1].is_zero()});
    for (unsigned k = 1; k <= nmax; ++k) {
        Rational coeff = 1;
        for (unsigned i = 1; i < k; ++i)
            coeff /= 2;
        r.checks.push_back({"tr(C^" + std::to_string(2 * k) + ") = " + to_string(coeff) + "*tr(C^2)^" +
                                std::to_string(k),
                            tr[2 * k] == coeff * pow(tr[2], k)});
        r.checks.push_back({"tr(C^" + std::to_string(2 * k + 1) + ") = 0", tr[2 * k + 1].is_zero()});
    }
    return r;
}

/// X, Y, E, F, H as polynomials in the five trace generators:
/// X = tr(x*), Y = -tr(x), E = tr((x*)^2)/2, F = -tr(x^2)/2, H = tr(xx*).
inline std::vector<Polynomial> sl2_heisenberg_coordinates()
{
    const auto t = [](VarId k) { return Polynomial::variable(k); };
    const Rational half(1, 2);
    return {t(1), -t(0), half * t(3), -half * t(2), t(4)};
}

/// Primed coordinates in terms of X, Y, E, F, H (variables 0..4):
/// H' = H + XY/2, E' = E - X^2/4, F' = F + Y^2/4, X' = X, Y' = Y.
/// Returned in the order X', Y', E', F', H'.
inline std::vector<Polynomial> primed_coordinates()
{
    const auto v = [](VarId k) { return Polynomial::variable(k); };
    const Rational q(1, 4), h(1, 2);
    const Polynomial X = v(0), Y = v(1), E = v(2), F = v(3), H = v(4);
    return {X, Y, E - q * X * X, F + q * Y * Y, H + h * X * Y};
}

/// c = H'^2 + 4E'F' as a polynomial in X, Y, E, F, H.
inline Polynomial sl2_casimir()
{
    const std::vector<Polynomial> p = primed_coordinates();
    return p[4] * p[4] + Rational(4) * p[2] * p[3];
}

/// The Casimir pulled back to the five trace generators.
inline Polynomial sl2_casimir_in_traces()
{
    const std::vector<Polynomial> xyefh = sl2_heisenberg_coordinates();
    std::map<VarId, Polynomial> images;
    for (VarId k = 0; k < 5; ++k)
        images.emplace(k, xyefh[k]);
    return substitute(sl2_casimir(), images);
}

/// Images of c_k = [x,x*]^k in the trace ring of 2×2 matrices, checked as
/// identities in the 8 matrix entries. With
///   D = tr(x)tr(x*)tr(xx*) - tr(xx*)^2 + tr(x^2)tr((x*)^2)
///       - 1/2 (tr(x^2)tr(x*)^2 + tr(x)^2 tr((x*)^2)):
/// D = tr(x^2(x*)^2) - tr((xx*)^2) = -c, tr([x,x*]^2) = -2D, so
/// c_2k -> 2^(1-k) (2c)^k = 2 c^k and c_2k+1 -> 0.
struct CasimirImageReport {
    IdentityReport verified;
    IdentityReport literal; // the same statements with tr([x,x*]^2) = D, c_2k -> -2^(1-k) c^k
};

inline CasimirImageReport casimir_image()
{
    const GenericMatrices g = generic_matrices(1, 2);
    const auto t = [](VarId k) { return Polynomial::variable(k); };
    const Rational half(1, 2);
    const Polynomial displayed =
        t(0) * t(1) * t(4) - t(4) * t(4) + t(2) * t(3) - half * (t(2) * t(1) * t(1) + t(0) * t(0) * t(3));
    const std::vector<Necklace> gens = standard_trace_generators(1, 2);
    const auto generic = [&](const Polynomial& p) { return evaluate_on_generic({gens, p, true}, g); };
    const auto tr = [&](const char* w) { return trace_of(parse_necklace_element(g.alphabet, w), g); };

    std::vector<Polynomial> c{Polynomial()};
    for (unsigned k = 1; k <= 5; ++k)
        c.push_back(trace_of(center_element(1, k), g));
    const Polynomial cas = sl2_casimir_in_traces();
    const Polynomial d = generic(displayed);

    CasimirImageReport r;
    auto& v = r.verified.checks;
    v.push_back({"tr(x^2(x*)^2) - tr((xx*)^2) equals the generator expression", tr("xxx*x*") - tr("xx*xx*") == d});
    v.push_back({"generator expression equals -c_sl2", displayed == -cas});
    v.push_back({"tr([x,x*]^2) = -2 * generator expression", c[2] == Rational(-2) * d});
    v.push_back({"c_1 -> 0", c[1].is_zero()});
    v.push_back({"c_2 -> 2*c_sl2", c[2] == generic(Rational(2) * cas)});
    v.push_back({"c_3 -> 0", c[3].is_zero()});
    v.push_back({"c_4 -> 2*c_sl2^2", c[4] == generic(Rational(2) * cas * cas)});
    v.push_back({"c_5 -> 0", c[5].is_zero()});

    auto& l = r.literal.checks;
    l.push_back({"tr([x,x*]^2) equals the generator expression", c[2] == d});
    l.push_back({"c_2 -> -c_sl2", c[2] == generic(-cas)});
    l.push_back({"c_4 -> -1/2*c_sl2^2", c[4] == generic(-half * cas * cas)});
    return r;
}

/// c_n evaluated at X = [[0,λ,0],[0,0,-λ],[0,0,0]], X* = [[0,0,0],[1,0,0],[0,1,0]].
inline Rational center_witness(unsigned n, const Rational& lambda)
{
    const Rational z = 0, one = 1;
    const Matrix<Rational> x(3, {z, lambda, z, z, z, -lambda, z, z, z});
    const Matrix<Rational> xs(3, {z, z, z, one, z, z, z, one, z});
    return trace_of(center_element(1, n), Alphabet::symplectic(1), std::vector<Matrix<Rational>>{x, xs});
}

/// 2λ^n + (-2)^n λ^n.
inline Rational center_witness_expected(unsigned n, const Rational& lambda)
{
    Rational ln = 1, m2n = 1;
    for (unsigned i = 0; i < n; ++i) {
        ln *= lambda;
        m2n *= -2;
    }
    return 2 * ln + m2n * ln;
}

enum class LeafKind { level_set, nilpotent_cone, origin }; // S_λ, S'_0, S''_0
enum class LunaType { tau1, tau2, tau3 };

inline std::string luna_name(LunaType t)
{
    switch (t) {
    case LunaType::tau1: return "tau1 = [(2,1)]";
    case LunaType::tau2: return "tau2 = [(1,1);(1,1)]";
    default: return "tau3 = [(1,2)]";
    }
}

template <class T>
struct LeafClass {
    LeafKind kind;
    LunaType luna_type;
    T casimir; // value of c_sl2
    T e, f, h; // E', F', H'
};

namespace detail {
template <class T>
bool vanishes(const T& v, double tol)
{
    if constexpr (std::is_floating_point_v<T>)
        return std::abs(v) <= tol;
    else
        return v == 0;
}

inline std::string scalar_string(const Rational& q) { return to_string(q); }
inline std::string scalar_string(double v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}
} // namespace detail

template <class T>
std::string leaf_name(const LeafClass<T>& c)
{
    switch (c.kind) {
    case LeafKind::level_set: return "S_" + detail::scalar_string(c.casimir);
    case LeafKind::nilpotent_cone: return "S'_0";
    default: return "S''_0";
    }
}

/// Symplectic leaf and Luna stratum of the point (X, Y, E, F, H). Exact for
/// rationals; for doubles a value counts as zero when |v| <= tol.
template <class T>
LeafClass<T> classify_point(const T& X, const T& Y, const T& E, const T& F, const T& H, double tol = 1e-9)
{
    const T e = E - X * X / 4;
    const T f = F + Y * Y / 4;
    const T h = H + X * Y / 2;
    const T c = h * h + 4 * e * f;
    if (detail::vanishes(e, tol) && detail::vanishes(f, tol) && detail::vanishes(h, tol))
        return {LeafKind::origin, LunaType::tau3, c, e, f, h};
    if (detail::vanishes(c, tol))
        return {LeafKind::nilpotent_cone, LunaType::tau2, c, e, f, h};
    return {LeafKind::level_set, LunaType::tau1, c, e, f, h};
}

} // namespace necklace
