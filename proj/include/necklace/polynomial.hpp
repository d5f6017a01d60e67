#pragma once

#include "necklace/grammar.hpp"
#include "necklace/linear_combination.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace necklace {

using VarId = std::uint32_t;

/// Product of indeterminates, stored as sorted (variable, exponent) pairs
/// with positive exponents. Ordered graded-lexicographically.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(VarId v, unsigned exponent = 1)
    {
        Monomial m;
        if (exponent > 0)
            m.powers_.emplace_back(v, exponent);
        return m;
    }

    const std::vector<std::pair<VarId, unsigned>>& powers() const { return powers_; }
    bool is_one() const { return powers_.empty(); }

    unsigned degree() const
    {
        unsigned d = 0;
        for (const auto& [v, e] : powers_)
            d += e;
        return d;
    }

    unsigned exponent(VarId v) const
    {
        for (const auto& [u, e] : powers_)
            if (u == v)
                return e;
        return 0;
    }

    /// This monomial with the exponent of v lowered by one; v must divide it.
    Monomial without_one(VarId v) const
    {
        Monomial out;
        for (const auto& [u, e] : powers_) {
            if (u != v)
                out.powers_.emplace_back(u, e);
            else if (e > 1)
                out.powers_.emplace_back(u, e - 1);
        }
        return out;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        Monomial out;
        out.powers_.reserve(a.powers_.size() + b.powers_.size());
        auto i = a.powers_.begin(), j = b.powers_.begin();
        while (i != a.powers_.end() && j != b.powers_.end()) {
            if (i->first < j->first)
                out.powers_.push_back(*i++);
            else if (j->first < i->first)
                out.powers_.push_back(*j++);
            else {
                out.powers_.emplace_back(i->first, i->second + j->second);
                ++i, ++j;
            }
        }
        out.powers_.insert(out.powers_.end(), i, a.powers_.end());
        out.powers_.insert(out.powers_.end(), j, b.powers_.end());
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        const unsigned da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        // Lex with variable 0 most significant: a < b when at the first
        // difference b has the earlier variable or the larger exponent.
        const auto& pa = a.powers_;
        const auto& pb = b.powers_;
        for (std::size_t i = 0; i < pa.size() && i < pb.size(); ++i) {
            if (pa[i].first != pb[i].first)
                return pa[i].first > pb[i].first;
            if (pa[i].second != pb[i].second)
                return pa[i].second < pb[i].second;
        }
        return pa.size() < pb.size();
    }

private:
    std::vector<std::pair<VarId, unsigned>> powers_;
};

/// Sparse distributed polynomial with exact rational coefficients.
class Polynomial {
public:
    using Terms = LinearCombination<Monomial>;

    Polynomial() = default;
    Polynomial(int c) : terms_(Terms::term(Monomial(), Rational(c))) {}
    Polynomial(const Rational& c) : terms_(Terms::term(Monomial(), c)) {}
    explicit Polynomial(Terms t) : terms_(std::move(t)) {}

    static Polynomial variable(VarId v) { return Polynomial(Terms::term(Monomial::variable(v))); }
    static Polynomial term(const Monomial& m, const Rational& c) { return Polynomial(Terms::term(m, c)); }

    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    bool is_zero() const { return terms_.is_zero(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const { return is_zero() || (size() == 1 && begin()->first.is_one()); }
    Rational constant_term() const { return terms_.coefficient(Monomial()); }

    unsigned degree() const
    {
        unsigned d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.degree());
        return d;
    }

    Polynomial& operator+=(const Polynomial& o) { terms_ += o.terms_; return *this; }
    Polynomial& operator-=(const Polynomial& o) { terms_ -= o.terms_; return *this; }
    Polynomial& operator*=(const Rational& s) { terms_ *= s; return *this; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.terms_.add_term(ma * mb, ca * cb);
        return out;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

inline Polynomial pow(const Polynomial& p, unsigned n)
{
    Polynomial out(1), base = p;
    while (n > 0) {
        if (n & 1u)
            out *= base;
        n >>= 1;
        if (n > 0)
            base *= base;
    }
    return out;
}

/// ∂p/∂v.
inline Polynomial derivative(const Polynomial& p, VarId v)
{
    Polynomial out;
    for (const auto& [m, c] : p) {
        const unsigned e = m.exponent(v);
        if (e > 0)
            out += Polynomial::term(m.without_one(v), c * e);
    }
    return out;
}

/// Variables occurring in p, ascending.
inline std::vector<VarId> variables(const Polynomial& p)
{
    std::vector<VarId> out;
    for (const auto& [m, c] : p)
        for (const auto& [v, e] : m.powers())
            out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Replaces each variable v that has an image by images.at(v); other
/// variables are kept.
inline Polynomial substitute(const Polynomial& p, const std::map<VarId, Polynomial>& images)
{
    std::map<std::pair<VarId, unsigned>, Polynomial> powers;
    const auto power_of = [&](VarId v, unsigned e) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it == powers.end())
            it = powers.emplace(key, pow(images.at(v), e)).first;
        return it->second;
    };
    Polynomial out;
    for (const auto& [m, c] : p) {
        Polynomial t(c);
        for (const auto& [v, e] : m.powers()) {
            if (images.count(v))
                t *= power_of(v, e);
            else
                t *= Polynomial::term(Monomial::variable(v, e), 1);
        }
        out += t;
    }
    return out;
}

/// Evaluates p at values[v] for every variable v, in any ring T that
/// accepts rational scalars.
template <class T>
T evaluate(const Polynomial& p, const std::vector<T>& values)
{
    T out = T(0);
    for (const auto& [m, c] : p) {
        T t;
        if constexpr (std::is_floating_point_v<T>)
            t = c.get_d();
        else
            t = T(c);
        for (const auto& [v, e] : m.powers())
            for (unsigned i = 0; i < e; ++i)
                t = t * values.at(v);
        out = out + t;
    }
    return out;
}

/// Names for indeterminates, used to print and parse polynomials.
class VariableNames {
public:
    VariableNames() = default;
    explicit VariableNames(std::vector<std::string> names) : names_(std::move(names)) {}

    VarId add(std::string name)
    {
        names_.push_back(std::move(name));
        return static_cast<VarId>(names_.size() - 1);
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(VarId v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }

    VarId id(std::string_view name) const
    {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return static_cast<VarId>(i);
        throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    }

    Polynomial operator()(std::string_view name) const { return Polynomial::variable(id(name)); }

    std::string format(const Monomial& m) const
    {
        if (m.is_one())
            return "1";
        std::string out;
        for (const auto& [v, e] : m.powers()) {
            if (!out.empty())
                out += "*";
            out += name(v);
            if (e > 1)
                out += "^" + std::to_string(e);
        }
        return out;
    }

    std::string format(const Polynomial& p) const
    {
        // Highest degree first.
        std::vector<std::pair<Monomial, Rational>> terms(p.begin(), p.end());
        std::reverse(terms.begin(), terms.end());
        return format_terms(terms, [&](const Monomial& m) { return format(m); });
    }

    /// Parses sums of terms "c*v1^e1*v2 ..." with rational coefficients;
    /// variable names are matched longest first.
    Polynomial parse(std::string_view text) const
    {
        std::size_t pos = 0;
        const auto fail = [&](const std::string& why) -> Polynomial {
            throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
        };
        const auto skip_ws = [&] {
            while (pos < text.size() && text[pos] == ' ')
                ++pos;
        };
        const auto number = [&](bool allow_slash) {
            const std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || (allow_slash && text[pos] == '/')))
                ++pos;
            return text.substr(start, pos - start);
        };
        const auto match_name = [&]() -> std::pair<std::size_t, VarId> {
            std::size_t best = 0;
            VarId found = 0;
            for (std::size_t i = 0; i < names_.size(); ++i) {
                const std::string& nm = names_[i];
                if (nm.size() > best && text.substr(pos, nm.size()) == nm) {
                    best = nm.size();
                    found = static_cast<VarId>(i);
                }
            }
            return {best, found};
        };

        Polynomial out;
        bool first = true;
        skip_ws();
        if (pos == text.size())
            return fail("empty input");
        while (true) {
            skip_ws();
            if (pos == text.size())
                break;
            Rational sign = 1;
            if (text[pos] == '+' || text[pos] == '-') {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
                skip_ws();
            } else if (!first) {
                return fail("expected '+' or '-' at '" + std::string(text.substr(pos)) + "'");
            }
            Polynomial term(sign);
            bool have_factor = false;
            const std::string_view coeff = number(true);
            if (!coeff.empty()) {
                term *= parse_rational(coeff);
                have_factor = true;
            }
            while (true) {
                skip_ws();
                if (have_factor) {
                    if (pos < text.size() && text[pos] == '*')
                        ++pos;
                    else if (pos < text.size() && !coeff.empty() && std::isalpha(static_cast<unsigned char>(text[pos])))
                        ; // "2X" without '*'
                    else
                        break;
                    skip_ws();
                }
                auto [len, v] = match_name();
                if (len == 0) {
                    if (have_factor && pos < text.size() && text[pos - 1] == '*')
                        return fail("expected a variable at '" + std::string(text.substr(pos)) + "'");
                    break;
                }
                pos += len;
                unsigned e = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    const std::string_view ev = number(false);
                    if (ev.empty())
                        return fail("missing exponent");
                    e = static_cast<unsigned>(std::stoul(std::string(ev)));
                }
                term *= Polynomial::term(Monomial::variable(v, e), 1);
                have_factor = true;
            }
            if (!have_factor)
                return fail("expected a term at '" + std::string(text.substr(pos)) + "'");
            out += term;
            first = false;
        }
        return out;
    }

private:
    std::vector<std::string> names_;
};

} // namespace necklace
