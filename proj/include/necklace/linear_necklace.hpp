#pragma once

#include "necklace/double_bracket.hpp"
#include "necklace/grammar.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace necklace {

/// Structure constants a(i,j,k) of a multiplication x_i x_j = Σ_k a(i,j,k) x_k
/// on an n-dimensional space, 1-based. Absent entries are zero.
class StructureConstants {
public:
    using Index = std::array<int, 3>;

    explicit StructureConstants(int dim, std::vector<std::string> names = {}) : dim_(dim), names_(std::move(names))
    {
        if (dim < 1)
            throw std::invalid_argument("structure constants need dim >= 1");
        if (names_.empty())
            for (int i = 1; i <= dim; ++i)
                names_.push_back("x" + std::to_string(i));
        if (static_cast<int>(names_.size()) != dim)
            throw std::invalid_argument("one generator name per basis vector required");
    }

    int dim() const { return dim_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::map<Index, Rational>& entries() const { return a_; }

    void set(int i, int j, int k, const Rational& value)
    {
        check_range(i), check_range(j), check_range(k);
        if (value == 0)
            a_.erase({i, j, k});
        else
            a_[{i, j, k}] = value;
    }

    Rational get(int i, int j, int k) const
    {
        auto it = a_.find({i, j, k});
        return it == a_.end() ? Rational(0) : it->second;
    }

    /// First (i,j,k,s) with Σ_t a(i,j,t) a(t,k,s) != Σ_t a(j,k,t) a(i,t,s).
    std::optional<std::array<int, 4>> associativity_violation() const
    {
        for (int i = 1; i <= dim_; ++i)
            for (int j = 1; j <= dim_; ++j)
                for (int k = 1; k <= dim_; ++k)
                    for (int s = 1; s <= dim_; ++s) {
                        Rational lhs = 0, rhs = 0;
                        for (int t = 1; t <= dim_; ++t) {
                            lhs += get(i, j, t) * get(t, k, s);
                            rhs += get(j, k, t) * get(i, t, s);
                        }
                        if (lhs != rhs)
                            return std::array<int, 4>{i, j, k, s};
                    }
        return std::nullopt;
    }

    void validate() const
    {
        if (auto v = associativity_violation())
            throw std::invalid_argument("structure constants are not associative at (i,j,k,s) = (" +
                                        std::to_string((*v)[0]) + "," + std::to_string((*v)[1]) + "," +
                                        std::to_string((*v)[2]) + "," + std::to_string((*v)[3]) + ")");
    }

private:
    void check_range(int i) const
    {
        if (i < 1 || i > dim_)
            throw std::out_of_range("structure constant index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(dim_));
    }

    int dim_;
    std::vector<std::string> names_;
    std::map<Index, Rational> a_;
};

/// The associative algebra of n×n matrices on the units e_ij, numbered
/// (i-1)·n + j and named "e<i><j>".
inline StructureConstants matrix_algebra(int n)
{
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            names.push_back(n < 10 ? "e" + std::to_string(i) + std::to_string(j)
                                   : "e" + std::to_string(i) + "_" + std::to_string(j));
    StructureConstants sc(n * n, std::move(names));
    const auto idx = [n](int i, int j) { return (i - 1) * n + j; };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int l = 1; l <= n; ++l)
                sc.set(idx(i, j), idx(j, l), idx(i, l), 1);
    return sc;
}

/// {{x_i, x_j}} = Σ_k a(i,j,k) x_k⊗1 - a(j,i,k) 1⊗x_k.
inline BracketRule linear_rule(const StructureConstants& sc)
{
    sc.validate();
    BracketRule::Table table;
    for (int i = 1; i <= sc.dim(); ++i) {
        for (int j = 1; j <= sc.dim(); ++j) {
            TensorElement t;
            for (int k = 1; k <= sc.dim(); ++k) {
                t.add_term({Word{x_(k)}, Word()}, sc.get(i, j, k));
                t.add_term({Word(), Word{x_(k)}}, -sc.get(j, i, k));
            }
            if (!t.is_zero())
                table[{x_(i), x_(j)}] = std::move(t);
        }
    }
    return BracketRule(Alphabet::plain(sc.names()), RuleKind::linear, std::move(table));
}

/// Linear rule of the full matrix algebra:
/// {{e_ij, e_kl}} = δ_jk e_il⊗1 - δ_il 1⊗e_kj.
inline BracketRule ngl(int n)
{
    if (n < 1)
        throw std::invalid_argument("ngl needs n >= 1");
    return linear_rule(matrix_algebra(n));
}

struct CommutatorReport {
    std::size_t pairs_checked = 0;
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Compares the degree-1 necklace bracket {x_i, x_j} with the commutator
/// Σ_k (a(i,j,k) - a(j,i,k)) x_k. With samples = 0 every pair is checked,
/// otherwise the first `samples` pairs in a seeded shuffle.
inline CommutatorReport check_degree1_commutator(const StructureConstants& sc, std::size_t samples = 0,
                                                 std::uint64_t seed = 0)
{
    const BracketRule rule = linear_rule(sc);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= sc.dim(); ++i)
        for (int j = 1; j <= sc.dim(); ++j)
            pairs.emplace_back(i, j);
    if (samples != 0 && samples < pairs.size()) {
        std::mt19937_64 rng(seed);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        pairs.resize(samples);
    }
    CommutatorReport report;
    for (auto [i, j] : pairs) {
        NecklaceElement expected;
        for (int k = 1; k <= sc.dim(); ++k)
            expected.add_term(Necklace(Word{x_(k)}), sc.get(i, j, k) - sc.get(j, i, k));
        const NecklaceElement got = necklace_bracket(rule, necklace_of(Word{x_(i)}), necklace_of(Word{x_(j)}));
        if (got != expected)
            report.mismatches.push_back("{" + sc.names()[i - 1] + ", " + sc.names()[j - 1] + "} = " +
                                        format(rule.alphabet(), got) + ", expected " +
                                        format(rule.alphabet(), expected));
        ++report.pairs_checked;
    }
    return report;
}

} // namespace necklace
