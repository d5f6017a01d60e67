#pragma once

#include "necklace/word.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace necklace {

class UnknownLetterError : public std::invalid_argument {
public:
    explicit UnknownLetterError(const std::string& what) : std::invalid_argument(what) {}
};

/// The finite generator set of a free algebra together with the names used
/// to print and parse words. Symplectic alphabets carry d pairs x_i, x_i*;
/// plain alphabets carry n unpaired generators.
class Alphabet {
public:
    static Alphabet symplectic(int d)
    {
        if (d < 1)
            throw std::invalid_argument("symplectic alphabet needs d >= 1");
        Alphabet a;
        a.pairs_ = d;
        for (int i = 1; i <= d; ++i) {
            const std::string base = d == 1 ? "x" : "x" + std::to_string(i);
            a.letters_.push_back(x_(i));
            a.names_.push_back(base);
            a.letters_.push_back(xs_(i));
            a.names_.push_back(base + "*");
        }
        if (d == 1) {
            a.aliases_.emplace_back("x1", x_(1));
            a.aliases_.emplace_back("x1*", xs_(1));
        }
        return a;
    }

    static Alphabet plain(std::vector<std::string> names)
    {
        if (names.empty())
            throw std::invalid_argument("plain alphabet needs at least one generator");
        Alphabet a;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i].empty() || (names[i][0] >= '0' && names[i][0] <= '9'))
                throw std::invalid_argument("generator names must not be empty or start with a digit");
            a.letters_.push_back(x_(static_cast<int>(i + 1)));
        }
        a.names_ = std::move(names);
        return a;
    }

    bool is_symplectic() const { return pairs_ > 0; }
    int pairs() const { return pairs_; }
    std::size_t size() const { return letters_.size(); }
    Letter letter(std::size_t code) const { return letters_.at(code); }
    const std::vector<Letter>& letters() const { return letters_; }

    bool contains(Letter l) const
    {
        if (is_symplectic())
            return l.index >= 1 && l.index <= pairs_;
        return !l.starred && l.index >= 1 && l.index <= letters_.size();
    }

    /// Position of `l` in the letter order.
    std::size_t code(Letter l) const
    {
        if (!contains(l))
            throw UnknownLetterError("letter " + describe(l) + " is not in the alphabet");
        return is_symplectic() ? 2u * (l.index - 1u) + (l.starred ? 1u : 0u) : l.index - 1u;
    }

    const std::string& name(Letter l) const { return names_[code(l)]; }

    std::string format(const Word& w) const
    {
        if (w.empty())
            return "1";
        std::string out;
        for (Letter l : w)
            out += name(l);
        return out;
    }

    /// Parses a concatenation of generator names; "1" is the empty word and
    /// the separators '·', '.' and spaces are ignored.
    Word parse_word(std::string_view text) const
    {
        std::vector<Letter> out;
        std::size_t pos = 0;
        if (trim(text) == "1")
            return Word();
        while (pos < text.size()) {
            if (text[pos] == ' ' || text[pos] == '.') {
                ++pos;
                continue;
            }
            if (text.substr(pos, 2) == "\xC2\xB7") {
                pos += 2;
                continue;
            }
            auto [len, letter] = match_letter(text.substr(pos));
            if (len == 0)
                throw UnknownLetterError("unknown generator at '" + std::string(text.substr(pos)) + "'");
            out.push_back(letter);
            pos += len;
        }
        return Word(std::move(out));
    }

    /// Longest generator name that prefixes `text`; length 0 when none does.
    std::pair<std::size_t, Letter> match_letter(std::string_view text) const
    {
        std::size_t best = 0;
        Letter found{};
        const auto consider = [&](const std::string& nm, Letter l) {
            if (nm.size() > best && text.substr(0, nm.size()) == nm) {
                best = nm.size();
                found = l;
            }
        };
        for (std::size_t i = 0; i < names_.size(); ++i)
            consider(names_[i], letters_[i]);
        for (const auto& [nm, l] : aliases_)
            consider(nm, l);
        return {best, found};
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b)
    {
        return a.pairs_ == b.pairs_ && a.names_ == b.names_;
    }

private:
    Alphabet() = default;

    static std::string describe(Letter l)
    {
        return "x" + std::to_string(l.index) + (l.starred ? "*" : "");
    }

    static std::string_view trim(std::string_view s)
    {
        while (!s.empty() && s.front() == ' ')
            s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ')
            s.remove_suffix(1);
        return s;
    }

    int pairs_ = 0;
    std::vector<Letter> letters_;
    std::vector<std::string> names_;
    std::vector<std::pair<std::string, Letter>> aliases_;
};

} // namespace necklace
