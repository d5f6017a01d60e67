#pragma once

#include "necklace/rational.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace necklace {

inline std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> small, large;
    for (std::int64_t k = 1; k * k <= n; ++k) {
        if (n % k == 0) {
            small.push_back(k);
            if (k != n / k)
                large.push_back(n / k);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Möbius function by trial-division factorization.
inline int mobius(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("mobius needs n >= 1");
    int sign = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        sign = -sign;
    }
    if (n > 1)
        sign = -sign;
    return sign;
}

/// C(n, k), zero when k is out of range.
inline Integer binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

/// C(a, b) with a rational lower index: zero unless b is an integer in range.
inline Integer binomial(std::int64_t n, const Rational& k)
{
    if (k.get_den() != 1)
        return 0;
    const Integer& num = k.get_num();
    if (!num.fits_slong_p())
        return 0;
    return binomial(n, num.get_si());
}

/// Number of necklaces of length k over an alphabet of 2d letters:
/// (1/k) Σ_{i=1}^{k} (2d)^{gcd(k,i)}. By convention the degree-0 space is the
/// span of the unit, so k = 0 gives 1.
inline Integer necklace_dimension(int d, std::int64_t k)
{
    if (d < 1 || k < 0)
        throw std::invalid_argument("necklace_dimension needs d >= 1 and k >= 0");
    if (k == 0)
        return 1;
    Integer sum = 0;
    for (std::int64_t i = 1; i <= k; ++i) {
        Integer term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(2 * d),
                      static_cast<unsigned long>(std::gcd(k, i)));
        sum += term;
    }
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(k)))
        throw std::logic_error("necklace count not integral");
    return sum / k;
}

/// Aperiodic binary necklaces of length l with j marked beads:
/// (1/l) Σ_{k | gcd(l,j)} μ(k) C(l/k, j/k).
inline Integer lyndon_count(std::int64_t l, std::int64_t j)
{
    if (l < 1 || j < 0 || j > l)
        throw std::invalid_argument("lyndon_count needs l >= 1 and 0 <= j <= l");
    Integer sum = 0;
    for (std::int64_t k : divisors(std::gcd(l, j)))
        sum += mobius(k) * binomial(l / k, j / k);
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(l)))
        throw std::logic_error("lyndon count not integral");
    return sum / l;
}

} // namespace necklace
