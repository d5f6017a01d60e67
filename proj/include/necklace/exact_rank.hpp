#pragma once

#include "necklace/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace necklace {

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by fraction-free (Bareiss) elimination. Every division performed is
/// exact, so entries stay integral and bounded by minors of the input.
inline std::size_t rank(IntegerMatrix m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    Integer prev_pivot = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev_pivot = m[r][c];
        ++r;
    }
    return r;
}

/// Clears denominators row by row, then eliminates over the integers.
inline std::size_t rank(const RationalMatrix& m)
{
    IntegerMatrix z;
    z.reserve(m.size());
    for (const auto& row : m) {
        Integer l = 1;
        for (const Rational& q : row)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Integer> zr;
        zr.reserve(row.size());
        for (const Rational& q : row)
            zr.push_back(q.get_num() * (l / q.get_den()));
        z.push_back(std::move(zr));
    }
    return rank(std::move(z));
}

} // namespace necklace
