#pragma once

#include "necklace/double_bracket.hpp"
#include "necklace/free_algebra.hpp"
#include "necklace/grammar.hpp"
#include "necklace/sampling.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace necklace {

/// {{a, u⊗v}} := {{a, u}} ⊗ v, extended linearly.
inline TripleTensor bracket_left(const BracketRule& rule, const Word& a, const TensorElement& t)
{
    TripleTensor out;
    for (const auto& [uv, c] : t)
        for (const auto& [pq, c2] : double_bracket(rule, a, uv.first))
            out.add_term({pq.first, pq.second, uv.second}, c * c2);
    return out;
}

/// Left-hand side of the double Jacobi identity
///   {{a,{{b,c}}}}_L + σ{{b,{{c,a}}}}_L + σ⁻¹{{c,{{a,b}}}}_L,
/// which vanishes exactly for a double Poisson bracket.
inline TripleTensor verify_double_jacobi(const BracketRule& rule, const Word& a, const Word& b, const Word& c)
{
    TripleTensor out = bracket_left(rule, a, double_bracket(rule, b, c));
    out += sigma(bracket_left(rule, b, double_bracket(rule, c, a)));
    out += sigma_inverse(bracket_left(rule, c, double_bracket(rule, a, b)));
    return out;
}

struct LodayCheck {
    bool loday_identity = false;   // {a,{b,c}} = {{a,b},c} + {b,{a,c}}
    bool commutator_kills = false; // {[a,b],c} = 0
};

inline LodayCheck verify_loday_properties(const BracketRule& rule, const Word& a, const Word& b, const Word& c)
{
    const FreeElement ea = FreeElement::term(a), eb = FreeElement::term(b), ec = FreeElement::term(c);
    const FreeElement lhs = loday_bracket(rule, ea, loday_bracket(rule, eb, ec));
    const FreeElement rhs = loday_bracket(rule, loday_bracket(rule, ea, eb), ec) +
                            loday_bracket(rule, eb, loday_bracket(rule, ea, ec));
    LodayCheck out;
    out.loday_identity = lhs == rhs;
    out.commutator_kills = loday_bracket(rule, commutator(ea, eb), ec).is_zero();
    return out;
}

struct GradedBracketReport {
    int degree_shift = 0;
    std::size_t samples_checked = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks deg{w1,w2} = deg w1 + deg w2 + shift on every nonzero output term
/// for `samples` random necklace pairs of degree <= max_degree each.
inline GradedBracketReport check_grading(const BracketRule& rule, int degree_shift, std::size_t samples,
                                         std::size_t max_degree, std::uint64_t seed = 0)
{
    GradedBracketReport report;
    report.degree_shift = degree_shift;
    WordSampler sampler(seed);
    const Alphabet& alphabet = rule.alphabet();
    for (std::size_t s = 0; s < samples; ++s) {
        const Necklace w1(sampler.word_up_to(alphabet, 0, max_degree));
        const Necklace w2(sampler.word_up_to(alphabet, 0, max_degree));
        const long expected = static_cast<long>(w1.degree() + w2.degree()) + degree_shift;
        for (const auto& [n, c] : necklace_bracket(rule, w1, w2)) {
            if (static_cast<long>(n.degree()) != expected) {
                report.violations.push_back("{" + alphabet.format(w1.word()) + ", " + alphabet.format(w2.word()) +
                                            "} has term " + alphabet.format(n.word()));
                break;
            }
        }
        ++report.samples_checked;
    }
    return report;
}

/// Projection of (Σ_i [x_i, x_i*])^n to the necklace space.
inline NecklaceElement center_element(int d, unsigned n)
{
    FreeElement c;
    for (int i = 1; i <= d; ++i)
        c += commutator(generator(x_(i)), generator(xs_(i)));
    return project_to_necklace(power(c, n));
}

/// Brackets center_element(d, n) against every basis necklace of degree at
/// most degree_bound and records the ones that do not vanish.
inline GradedBracketReport center_check(int d, unsigned n, std::size_t degree_bound)
{
    const BracketRule rule = BracketRule::canonical(d);
    const NecklaceElement c = center_element(d, n);
    GradedBracketReport report;
    report.degree_shift = -2;
    for (std::size_t k = 0; k <= degree_bound; ++k) {
        for (const Necklace& w : enumerate_necklaces(rule.alphabet(), k)) {
            const NecklaceElement r = necklace_bracket(rule, c, NecklaceElement::term(w));
            if (!r.is_zero())
                report.violations.push_back("{c_" + std::to_string(n) + ", " + rule.alphabet().format(w.word()) +
                                            "} = " + format(rule.alphabet(), r));
            ++report.samples_checked;
        }
    }
    return report;
}

/// A commutative monomial in necklaces: a sorted multiset. The empty
/// monomial is the unit of the symmetric algebra.
using NecklaceMonomial = std::vector<Necklace>;
using TraceAlgebraElement = LinearCombination<std::pair<NecklaceMonomial, Word>>;

inline TraceAlgebraElement trace_term(NecklaceMonomial m, Word w, const Rational& c = 1)
{
    std::sort(m.begin(), m.end());
    return TraceAlgebraElement::term({std::move(m), std::move(w)}, c);
}

/// Applies the derivation H_w = {w, -} to the trace algebra N ⊗ A: the
/// necklace bracket on each necklace factor (Leibniz rule) plus the Loday
/// bracket {w, -}_L on the word factor.
inline TraceAlgebraElement trace_algebra_derivation(const BracketRule& rule, const NecklaceElement& w,
                                                    const TraceAlgebraElement& t)
{
    const FreeElement w_lift = lift(w);
    TraceAlgebraElement out;
    for (const auto& [key, coeff] : t) {
        const auto& [mono, word] = key;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            const NecklaceElement br = necklace_bracket(rule, w, NecklaceElement::term(mono[i]));
            for (const auto& [n, c] : br) {
                NecklaceMonomial m = mono;
                m[i] = n;
                std::sort(m.begin(), m.end());
                out.add_term({std::move(m), word}, coeff * c);
            }
        }
        for (const auto& [u, c] : loday_bracket(rule, w_lift, FreeElement::term(word))) {
            out.add_term({mono, u}, coeff * c);
        }
    }
    return out;
}

} // namespace necklace
