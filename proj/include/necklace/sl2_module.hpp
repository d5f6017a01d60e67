#pragma once

#include "necklace/counting.hpp"
#include "necklace/double_bracket.hpp"
#include "necklace/exact_rank.hpp"
#include "necklace/free_algebra.hpp"
#include "necklace/grammar.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace necklace {

// Decomposition of the degree-n necklaces (d = 1) under the sl2 spanned by
// E = (x*)^2/2, F = -x^2/2, H = xx*. The highest weight n - 2m is indexed by
// m = number of x's, 0 <= m <= n/2.

/// Highest-weight multiplicities of one homogeneous component, keyed by weight.
struct WeightDecomposition {
    int degree = 0;
    std::map<int, long> multiplicities;

    long multiplicity(int weight) const
    {
        auto it = multiplicities.find(weight);
        return it == multiplicities.end() ? 0 : it->second;
    }

    /// Σ mult(V_k) · (k + 1).
    long dimension() const
    {
        long total = 0;
        for (const auto& [k, mlt] : multiplicities)
            total += mlt * (k + 1);
        return total;
    }

    friend bool operator==(const WeightDecomposition&, const WeightDecomposition&) = default;
};

struct Sl2Generators {
    NecklaceElement E, F, H;
};

inline Sl2Generators sl2_generators()
{
    const Word x{x_(1)}, xs{xs_(1)};
    return {NecklaceElement::term(Necklace(xs * xs), Rational(1, 2)),
            NecklaceElement::term(Necklace(x * x), Rational(-1, 2)), NecklaceElement::term(Necklace(x * xs))};
}

/// H-eigenvalue deg_{x*}(w) - deg_x(w).
inline int word_weight(const Word& w)
{
    return static_cast<int>(w.count_starred()) - static_cast<int>(w.count_unstarred());
}

/// Multiplicity of V_{n-2m} in the n-th tensor power of the defining
/// representation: C(n,m) - C(n,m-1).
inline Integer tensor_multiplicity(long n, long m)
{
    if (m < 0 || 2 * m > n)
        throw std::invalid_argument("tensor_multiplicity needs 0 <= m <= n/2");
    return binomial(n, m) - binomial(n, m - 1);
}

namespace detail {

// Number of basis elements w - rotate(w) of the commutator subspace C_n with
// m letters x, summed over orbit sizes l with l | n and n | l·m:
//   Σ_l ((l-1)/l) Σ_{k | gcd(l, l·m/n)} μ(k) C(l/k, l·m/(k·n)).
inline Integer commutator_basis_count(long n, long m)
{
    if (m < 0)
        return 0;
    Rational total = 0;
    for (long l : divisors(n)) {
        if ((l * m) % n != 0)
            continue;
        const long j = l * m / n;
        Integer inner = 0;
        for (long k : divisors(std::gcd(l, j)))
            inner += mobius(k) * binomial(l / k, j / k);
        total += Rational(l - 1, l) * Rational(inner);
    }
    if (!is_integer(total))
        throw std::logic_error("commutator basis count is not integral");
    return total.get_num();
}

} // namespace detail

/// Multiplicity of V_{n-2m} inside the commutator subspace C_n.
inline Integer cn_multiplicity(long n, long m)
{
    if (m < 0 || 2 * m > n)
        throw std::invalid_argument("cn_multiplicity needs 0 <= m <= n/2");
    return detail::commutator_basis_count(n, m) - detail::commutator_basis_count(n, m - 1);
}

/// Closed formula for the multiplicity of V_{n-2m} in the degree-n necklaces.
inline Integer multiplicity_formula(long n, long m)
{
    if (n < 1 || m < 0 || 2 * m > n)
        throw std::invalid_argument("multiplicity_formula needs n >= 1 and 0 <= m <= n/2");
    const Integer out = tensor_multiplicity(n, m) - cn_multiplicity(n, m);
    if (out < 0)
        throw std::logic_error("negative multiplicity");
    return out;
}

inline WeightDecomposition decomposition_from_formula(int n)
{
    WeightDecomposition d;
    d.degree = n;
    for (int m = 0; 2 * m <= n; ++m)
        d.multiplicities[n - 2 * m] = multiplicity_formula(n, m).get_si();
    return d;
}

/// Everything the linear-algebra route computes for one degree.
struct WeightSpaceAnalysis {
    int degree = 0;
    std::map<int, std::size_t> weight_space_dims; // all weights -n..n
    std::map<int, std::size_t> e_ranks;           // rank of E : W_k -> W_{k+2}, k = n-2m >= 0
    WeightDecomposition by_dimension;             // dim W_k - dim W_{k+2}
    WeightDecomposition by_rank;                  // dim W_k - rank(E|W_k)
};

constexpr int default_bruteforce_bound = 14;

inline WeightSpaceAnalysis analyze_weight_spaces(int n, int bound = default_bruteforce_bound)
{
    if (n < 1)
        throw std::invalid_argument("degree must be >= 1");
    if (n > bound)
        throw std::length_error("degree " + std::to_string(n) + " exceeds brute-force bound " +
                                std::to_string(bound));
    const BracketRule rule = BracketRule::canonical(1);
    const NecklaceElement E = sl2_generators().E;

    std::map<int, std::vector<Necklace>> spaces;
    for (const Necklace& w : enumerate_necklaces(rule.alphabet(), static_cast<std::size_t>(n)))
        spaces[word_weight(w.word())].push_back(w);

    WeightSpaceAnalysis out;
    out.degree = n;
    out.by_dimension.degree = out.by_rank.degree = n;
    for (int k = -n; k <= n; k += 2)
        out.weight_space_dims[k] = spaces[k].size();

    for (int m = 0; 2 * m <= n; ++m) {
        const int k = n - 2 * m;
        const std::size_t above = k + 2 <= n ? out.weight_space_dims[k + 2] : 0;
        out.by_dimension.multiplicities[k] =
            static_cast<long>(out.weight_space_dims[k]) - static_cast<long>(above);

        // Matrix of E restricted to W_k, one row per basis necklace.
        std::map<Necklace, std::size_t> target_index;
        if (k + 2 <= n)
            for (const Necklace& t : spaces[k + 2])
                target_index.emplace(t, target_index.size());
        RationalMatrix mat;
        for (const Necklace& w : spaces[k]) {
            std::vector<Rational> row(target_index.size());
            for (const auto& [t, c] : necklace_bracket(rule, E, NecklaceElement::term(w))) {
                auto it = target_index.find(t);
                if (it == target_index.end())
                    throw std::logic_error("E does not raise the weight by 2");
                row[it->second] = c;
            }
            mat.push_back(std::move(row));
        }
        const std::size_t r = target_index.empty() ? 0 : rank(mat);
        out.e_ranks[k] = r;
        out.by_rank.multiplicities[k] = static_cast<long>(out.weight_space_dims[k]) - static_cast<long>(r);
    }
    return out;
}

/// Multiplicities from the necklace basis directly; the weight-space count
/// and the exact rank of the E-action must agree.
inline WeightDecomposition decompose_bruteforce(int n, int bound = default_bruteforce_bound)
{
    const WeightSpaceAnalysis a = analyze_weight_spaces(n, bound);
    if (!(a.by_dimension == a.by_rank))
        throw std::logic_error("weight-space count and E-action rank disagree in degree " + std::to_string(n));
    return a.by_dimension;
}

/// Rows 1..max_degree from the closed formula.
inline std::vector<WeightDecomposition> table1(int max_degree)
{
    if (max_degree < 1)
        throw std::invalid_argument("table1 needs max_degree >= 1");
    std::vector<WeightDecomposition> rows;
    for (int n = 1; n <= max_degree; ++n)
        rows.push_back(decomposition_from_formula(n));
    return rows;
}

} // namespace necklace
