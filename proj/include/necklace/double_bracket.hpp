#pragma once

#include "necklace/alphabet.hpp"
#include "necklace/free_algebra.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace necklace {

enum class RuleKind { canonical_symplectic, linear, custom };

/// Values {{a, b}} of a double bracket on pairs of generators. Pairs that are
/// not stored bracket to zero. Twisted antisymmetry
/// {{b, a}} = -{{a, b}}° is checked on construction.
class BracketRule {
public:
    using Table = std::map<std::pair<Letter, Letter>, TensorElement>;

    BracketRule(Alphabet alphabet, RuleKind kind, Table table)
        : alphabet_(std::move(alphabet)), kind_(kind), table_(std::move(table))
    {
        for (const auto& [key, value] : table_) {
            alphabet_.code(key.first);
            alphabet_.code(key.second);
            for (const auto& [p, c] : value) {
                for (Letter l : p.first)
                    alphabet_.code(l);
                for (Letter l : p.second)
                    alphabet_.code(l);
            }
            if (on_generators(key.second, key.first) != -flip(value))
                throw std::invalid_argument("bracket table violates twisted antisymmetry at (" +
                                            alphabet_.name(key.first) + ", " + alphabet_.name(key.second) +
                                            ")");
        }
    }

    /// {{x_i, x_i*}} = 1⊗1, {{x_i*, x_i}} = -1⊗1, all other generator pairs 0.
    static BracketRule canonical(int d)
    {
        Table t;
        for (int i = 1; i <= d; ++i) {
            t[{x_(i), xs_(i)}] = tensor(Word(), Word());
            t[{xs_(i), x_(i)}] = -tensor(Word(), Word());
        }
        return BracketRule(Alphabet::symplectic(d), RuleKind::canonical_symplectic, std::move(t));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    RuleKind kind() const { return kind_; }
    const Table& table() const { return table_; }

    const TensorElement& on_generators(Letter a, Letter b) const
    {
        static const TensorElement zero;
        auto it = table_.find({a, b});
        return it == table_.end() ? zero : it->second;
    }

    void require_letters(const Word& w) const
    {
        for (Letter l : w)
            alphabet_.code(l);
    }

private:
    Alphabet alphabet_;
    RuleKind kind_;
    Table table_;
};

/// {{a, b}} on words by the closed form
///   Σ_{p,q} b_{<q} {{a_p,b_q}}' a_{>p} ⊗ a_{<p} {{a_p,b_q}}'' b_{>q},
/// which is what the outer-derivation rule in the second slot and twisted
/// antisymmetry force from the generator values.
inline TensorElement double_bracket(const BracketRule& rule, const Word& a, const Word& b)
{
    rule.require_letters(a);
    rule.require_letters(b);
    TensorElement out;
    for (std::size_t p = 0; p < a.size(); ++p) {
        for (std::size_t q = 0; q < b.size(); ++q) {
            const TensorElement& g = rule.on_generators(a[p], b[q]);
            if (g.is_zero())
                continue;
            const Word b_before = b.slice(0, q), b_after = b.slice(q + 1, b.size());
            const Word a_before = a.slice(0, p), a_after = a.slice(p + 1, a.size());
            for (const auto& [uv, c] : g)
                out.add_term({b_before * uv.first * a_after, a_before * uv.second * b_after}, c);
        }
    }
    return out;
}

inline TensorElement double_bracket(const BracketRule& rule, const FreeElement& a, const FreeElement& b)
{
    return apply_bilinear<WordPair>(a, b, [&](const Word& u, const Word& v) { return double_bracket(rule, u, v); });
}

/// Loday bracket {a, b}_L = μ({{a, b}}).
inline FreeElement loday_bracket(const BracketRule& rule, const Word& a, const Word& b)
{
    rule.require_letters(a);
    rule.require_letters(b);
    FreeElement out;
    for (std::size_t p = 0; p < a.size(); ++p) {
        for (std::size_t q = 0; q < b.size(); ++q) {
            const TensorElement& g = rule.on_generators(a[p], b[q]);
            if (g.is_zero())
                continue;
            const Word b_before = b.slice(0, q), b_after = b.slice(q + 1, b.size());
            const Word middle = a.slice(p + 1, a.size()) * a.slice(0, p);
            for (const auto& [uv, c] : g)
                out.add_term(b_before * uv.first * middle * uv.second * b_after, c);
        }
    }
    return out;
}

inline FreeElement loday_bracket(const BracketRule& rule, const FreeElement& a, const FreeElement& b)
{
    return apply_bilinear<Word>(a, b, [&](const Word& u, const Word& v) { return loday_bracket(rule, u, v); });
}

/// Bracket of two necklaces: Loday bracket of representatives, projected.
inline NecklaceElement necklace_bracket(const BracketRule& rule, const Necklace& a, const Necklace& b)
{
    return project_to_necklace(loday_bracket(rule, a.word(), b.word()));
}

inline NecklaceElement necklace_bracket(const BracketRule& rule, const NecklaceElement& a, const NecklaceElement& b)
{
    return apply_bilinear<Necklace>(a, b, [&](const Necklace& u, const Necklace& v) {
        return necklace_bracket(rule, u, v);
    });
}

} // namespace necklace
