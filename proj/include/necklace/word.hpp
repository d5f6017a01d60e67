#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace necklace {

/// A generator of the free algebra. Letters order as
/// x1 < x1* < x2 < x2* < ...; unpaired generators are stored unstarred.
struct Letter {
    std::uint16_t index = 1;
    bool starred = false;

    friend constexpr auto operator<=>(const Letter&, const Letter&) = default;

    constexpr Letter dual() const { return Letter{index, !starred}; }
};

constexpr Letter x_(int i) { return Letter{static_cast<std::uint16_t>(i), false}; }
constexpr Letter xs_(int i) { return Letter{static_cast<std::uint16_t>(i), true}; }

/// A word in the generators; the empty word is the unit.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    template <class It>
    Word(It first, It last) : letters_(first, last) {}

    std::size_t size() const { return letters_.size(); }
    std::size_t degree() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }
    const std::vector<Letter>& letters() const { return letters_; }

    std::size_t count_starred() const
    {
        return static_cast<std::size_t>(std::count_if(begin(), end(), [](Letter l) { return l.starred; }));
    }
    std::size_t count_unstarred() const { return size() - count_starred(); }

    /// Subword [from, to).
    Word slice(std::size_t from, std::size_t to) const
    {
        assert(from <= to && to <= size());
        return Word(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                    letters_.begin() + static_cast<std::ptrdiff_t>(to));
    }

    Word& operator*=(const Word& other)
    {
        letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
        return *this;
    }
    friend Word operator*(Word a, const Word& b) { return a *= b; }

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// Cyclic left shift by k: rotate(abc, 1) = bca.
inline Word rotate(const Word& w, std::size_t k)
{
    if (w.empty())
        return w;
    k %= w.size();
    std::vector<Letter> out(w.begin(), w.end());
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k), out.end());
    return Word(std::move(out));
}

/// Offset of the lexicographically least rotation (two-pointer minimum
/// expression algorithm, linear time).
inline std::size_t least_rotation_offset(const Word& w)
{
    const std::size_t n = w.size();
    if (n < 2)
        return 0;
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const Letter a = w[(i + k) % n];
        const Letter b = w[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j)
            ++j;
        k = 0;
    }
    return std::min(i, j);
}

inline Word canonical_rotation(const Word& w)
{
    return rotate(w, least_rotation_offset(w));
}

/// A cyclic word, stored by its least rotation.
class Necklace {
public:
    Necklace() = default;
    explicit Necklace(const Word& w) : rep_(canonical_rotation(w)) {}

    /// Skips canonicalization; `w` must already be a least rotation.
    static Necklace from_canonical(Word w)
    {
        Necklace n;
        n.rep_ = std::move(w);
        assert(canonical_rotation(n.rep_) == n.rep_);
        return n;
    }

    const Word& word() const { return rep_; }
    std::size_t degree() const { return rep_.size(); }

    friend auto operator<=>(const Necklace&, const Necklace&) = default;
    friend bool operator==(const Necklace&, const Necklace&) = default;

private:
    Word rep_;
};

} // namespace necklace
