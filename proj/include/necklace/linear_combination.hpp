#pragma once

#include "necklace/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <utility>

namespace necklace {

/// Finite formal sum of basis keys with coefficients. Zero coefficients are
/// never stored, so the empty map is the unique zero and equality is
/// structural.
template <class Key, class Coeff = Rational>
class LinearCombination {
public:
    using key_type = Key;
    using coeff_type = Coeff;
    using container = std::map<Key, Coeff>;
    using const_iterator = typename container::const_iterator;

    LinearCombination() = default;

    static LinearCombination term(Key key, Coeff coeff = Coeff(1))
    {
        LinearCombination out;
        out.add_term(std::move(key), coeff);
        return out;
    }

    void add_term(const Key& key, const Coeff& coeff)
    {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Coeff coefficient(const Key& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const container& terms() const { return terms_; }

    LinearCombination& operator+=(const LinearCombination& other)
    {
        for (const auto& [k, c] : other.terms_)
            add_term(k, c);
        return *this;
    }

    LinearCombination& operator-=(const LinearCombination& other)
    {
        for (const auto& [k, c] : other.terms_)
            add_term(k, -c);
        return *this;
    }

    LinearCombination& operator*=(const Coeff& scalar)
    {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= scalar;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator-(LinearCombination a) { return a *= Coeff(-1); }
    friend LinearCombination operator*(const Coeff& s, LinearCombination a) { return a *= s; }
    friend LinearCombination operator*(LinearCombination a, const Coeff& s) { return a *= s; }

    friend bool operator==(const LinearCombination& a, const LinearCombination& b)
    {
        return a.terms_ == b.terms_;
    }

private:
    container terms_;
};

/// Extends `f : Key -> LinearCombination<NewKey>` linearly.
template <class NewKey, class Key, class Coeff, class F>
LinearCombination<NewKey, Coeff> apply_linear(const LinearCombination<Key, Coeff>& x, F&& f)
{
    LinearCombination<NewKey, Coeff> out;
    for (const auto& [k, c] : x) {
        for (const auto& [k2, c2] : f(k))
            out.add_term(k2, c * c2);
    }
    return out;
}

/// Extends `f : (Key1, Key2) -> LinearCombination<NewKey>` bilinearly.
template <class NewKey, class K1, class K2, class Coeff, class F>
LinearCombination<NewKey, Coeff> apply_bilinear(const LinearCombination<K1, Coeff>& x,
                                                const LinearCombination<K2, Coeff>& y, F&& f)
{
    LinearCombination<NewKey, Coeff> out;
    for (const auto& [k1, c1] : x) {
        for (const auto& [k2, c2] : y) {
            const Coeff c = c1 * c2;
            for (const auto& [k, c3] : f(k1, k2))
                out.add_term(k, c * c3);
        }
    }
    return out;
}

} // namespace necklace
