#pragma once

#include "necklace/alphabet.hpp"
#include "necklace/linear_combination.hpp"
#include "necklace/word.hpp"

#include <array>
#include <utility>
#include <vector>

namespace necklace {

using FreeElement = LinearCombination<Word>;
using NecklaceElement = LinearCombination<Necklace>;
using WordPair = std::pair<Word, Word>;
using TensorElement = LinearCombination<WordPair>;
using WordTriple = std::array<Word, 3>;
using TripleTensor = LinearCombination<WordTriple>;

inline FreeElement unit() { return FreeElement::term(Word()); }
inline FreeElement generator(Letter l) { return FreeElement::term(Word{l}); }

inline FreeElement operator*(const FreeElement& a, const FreeElement& b)
{
    return apply_bilinear<Word>(a, b, [](const Word& u, const Word& v) { return FreeElement::term(u * v); });
}

inline FreeElement commutator(const FreeElement& a, const FreeElement& b)
{
    return a * b - b * a;
}

inline FreeElement power(const FreeElement& a, unsigned n)
{
    FreeElement out = unit();
    for (unsigned i = 0; i < n; ++i)
        out = out * a;
    return out;
}

/// A = sum over words; the quotient map A -> A/[A,A].
inline NecklaceElement project_to_necklace(const FreeElement& e)
{
    NecklaceElement out;
    for (const auto& [w, c] : e)
        out.add_term(Necklace(w), c);
    return out;
}

inline NecklaceElement necklace_of(const Word& w)
{
    return NecklaceElement::term(Necklace(w));
}

/// Chooses the stored least rotation as representative of each necklace.
inline FreeElement lift(const NecklaceElement& e)
{
    FreeElement out;
    for (const auto& [n, c] : e)
        out.add_term(n.word(), c);
    return out;
}

inline TensorElement tensor(const Word& a, const Word& b)
{
    return TensorElement::term({a, b});
}

/// (a ⊗ b)° = b ⊗ a.
inline TensorElement flip(const TensorElement& t)
{
    TensorElement out;
    for (const auto& [p, c] : t)
        out.add_term({p.second, p.first}, c);
    return out;
}

/// Outer bimodule action  a.(u ⊗ v).b = au ⊗ vb.
inline TensorElement outer(const Word& a, const TensorElement& t, const Word& b)
{
    TensorElement out;
    for (const auto& [p, c] : t)
        out.add_term({a * p.first, p.second * b}, c);
    return out;
}

/// Multiplication map μ(u ⊗ v) = uv.
inline FreeElement multiply(const TensorElement& t)
{
    FreeElement out;
    for (const auto& [p, c] : t)
        out.add_term(p.first * p.second, c);
    return out;
}

/// σ(a1 ⊗ a2 ⊗ a3) = a3 ⊗ a1 ⊗ a2.
inline TripleTensor sigma(const TripleTensor& t)
{
    TripleTensor out;
    for (const auto& [w, c] : t)
        out.add_term({w[2], w[0], w[1]}, c);
    return out;
}

/// σ⁻¹(a1 ⊗ a2 ⊗ a3) = a2 ⊗ a3 ⊗ a1.
inline TripleTensor sigma_inverse(const TripleTensor& t)
{
    TripleTensor out;
    for (const auto& [w, c] : t)
        out.add_term({w[1], w[2], w[0]}, c);
    return out;
}

/// All words of length n over the alphabet, in lexicographic order.
inline std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t n)
{
    std::vector<Word> out{Word()};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Word> next;
        next.reserve(out.size() * alphabet.size());
        for (const Word& w : out)
            for (Letter l : alphabet.letters())
                next.push_back(w * Word{l});
        out = std::move(next);
    }
    return out;
}

/// All necklaces of degree n, sorted, generated directly by the
/// Fredricksen-Kessler-Maiorana algorithm. Degree 0 yields the unit necklace.
inline std::vector<Necklace> enumerate_necklaces(const Alphabet& alphabet, std::size_t n)
{
    std::vector<Necklace> out;
    if (n == 0) {
        out.push_back(Necklace());
        return out;
    }
    const std::size_t k = alphabet.size();
    std::vector<std::size_t> a(n + 1, 0);
    const auto emit = [&] {
        std::vector<Letter> letters;
        letters.reserve(n);
        for (std::size_t i = 1; i <= n; ++i)
            letters.push_back(alphabet.letter(a[i]));
        out.push_back(Necklace::from_canonical(Word(std::move(letters))));
    };
    // Iterative FKM: a[1..n] runs through prenecklaces in lex order.
    std::size_t i = 1;
    emit();
    for (;;) {
        i = n;
        while (i >= 1 && a[i] == k - 1)
            --i;
        if (i == 0)
            break;
        ++a[i];
        for (std::size_t j = i + 1; j <= n; ++j)
            a[j] = a[j - i];
        if (n % i == 0)
            emit();
    }
    return out;
}

inline std::vector<Necklace> enumerate_necklaces(int d, std::size_t n)
{
    return enumerate_necklaces(Alphabet::symplectic(d), n);
}

} // namespace necklace
