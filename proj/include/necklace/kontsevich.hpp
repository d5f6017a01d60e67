#pragma once

#include "necklace/free_algebra.hpp"

#include <stdexcept>
#include <vector>

namespace necklace {

namespace detail {

// Cuts the cyclic word open at position `pos`, dropping that bead and
// returning the remaining beads read onward from pos+1.
inline std::vector<Letter> open_at(const Word& w, std::size_t pos)
{
    std::vector<Letter> out;
    out.reserve(w.size() - 1);
    for (std::size_t i = 1; i < w.size(); ++i)
        out.push_back(w[(pos + i) % w.size()]);
    return out;
}

inline void splice_all(const Word& from, const Word& into, const Rational& sign, NecklaceElement& out)
{
    for (std::size_t p = 0; p < from.size(); ++p) {
        if (from[p].starred)
            continue;
        for (std::size_t q = 0; q < into.size(); ++q) {
            if (!(into[q].starred && into[q].index == from[p].index))
                continue;
            std::vector<Letter> joined = open_at(from, p);
            const std::vector<Letter> tail = open_at(into, q);
            joined.insert(joined.end(), tail.begin(), tail.end());
            out.add_term(Necklace(Word(std::move(joined))), sign);
        }
    }
}

} // namespace detail

/// Cut-and-join bracket of two necklaces over d symplectic pairs: for every
/// bead x_i of w1 and bead x_i* of w2, remove both and join the opened
/// necklaces; then subtract the same with w1 and w2 exchanged.
inline NecklaceElement kontsevich_bracket(const Necklace& w1, const Necklace& w2, int d)
{
    for (const Necklace* w : {&w1, &w2})
        for (Letter l : w->word())
            if (l.index < 1 || l.index > d)
                throw std::invalid_argument("letter index outside 1..d in kontsevich_bracket");
    NecklaceElement out;
    detail::splice_all(w1.word(), w2.word(), Rational(1), out);
    detail::splice_all(w2.word(), w1.word(), Rational(-1), out);
    return out;
}

inline NecklaceElement kontsevich_bracket(const NecklaceElement& a, const NecklaceElement& b, int d)
{
    return apply_bilinear<Necklace>(a, b, [&](const Necklace& u, const Necklace& v) {
        return kontsevich_bracket(u, v, d);
    });
}

} // namespace necklace
