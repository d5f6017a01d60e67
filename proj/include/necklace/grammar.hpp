#pragma once

#include "necklace/alphabet.hpp"
#include "necklace/free_algebra.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace necklace {

/// Joins "coefficient*basis" terms as "a - 2*b + 1/2*c"; a basis string of
/// "1" prints as the bare coefficient.
template <class Range, class BasisFormatter>
std::string format_terms(const Range& terms, BasisFormatter&& basis)
{
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : terms) {
        const std::string b = basis(key);
        Rational mag = abs(coeff);
        const bool negative = coeff < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (b == "1")
            out += to_string(mag);
        else if (mag == 1)
            out += b;
        else
            out += to_string(mag) + "*" + b;
        first = false;
    }
    return first ? "0" : out;
}

inline std::string format(const Alphabet& a, const FreeElement& e)
{
    return format_terms(e, [&](const Word& w) { return a.format(w); });
}

inline std::string format(const Alphabet& a, const NecklaceElement& e)
{
    return format_terms(e, [&](const Necklace& n) { return a.format(n.word()); });
}

inline std::string format(const Alphabet& a, const TensorElement& e)
{
    return format_terms(e, [&](const WordPair& p) { return a.format(p.first) + "⊗" + a.format(p.second); });
}

inline std::string format(const Alphabet& a, const TripleTensor& e)
{
    return format_terms(
        e, [&](const WordTriple& t) { return a.format(t[0]) + "⊗" + a.format(t[1]) + "⊗" + a.format(t[2]); });
}

/// Parses "c1*w1 + c2*w2 - w3" where coefficients are "p/q" rationals and
/// words use the alphabet's generator names. A bare rational is a multiple
/// of the unit word.
inline FreeElement parse_free_element(const Alphabet& a, std::string_view text)
{
    FreeElement out;
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
    };
    const auto fail = [&](const std::string& why) {
        throw std::invalid_argument("cannot parse element '" + std::string(text) + "': " + why);
    };
    skip_ws();
    if (pos == text.size())
        fail("empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size())
            break;
        Rational sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        // Optional rational coefficient.
        Rational coeff = 1;
        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        bool have_coeff = pos > start;
        if (have_coeff)
            coeff = parse_rational(text.substr(start, pos - start));
        skip_ws();
        Word w;
        if (pos < text.size() && text[pos] == '*' && have_coeff) {
            ++pos;
            skip_ws();
        }
        // Word: maximal run of generator names, dots and middle dots.
        std::vector<Letter> letters;
        while (pos < text.size()) {
            if (text[pos] == '.') {
                ++pos;
                continue;
            }
            if (text.substr(pos, 2) == "\xC2\xB7") {
                pos += 2;
                continue;
            }
            auto [len, letter] = a.match_letter(text.substr(pos));
            if (len == 0)
                break;
            letters.push_back(letter);
            pos += len;
        }
        if (!have_coeff && letters.empty())
            fail("expected a term at '" + std::string(text.substr(pos)) + "'");
        out.add_term(Word(std::move(letters)), sign * coeff);
        first = false;
        skip_ws();
        if (pos < text.size() && text[pos] != '+' && text[pos] != '-')
            fail("unexpected '" + std::string(text.substr(pos)) + "'");
    }
    return out;
}

inline NecklaceElement parse_necklace_element(const Alphabet& a, std::string_view text)
{
    return project_to_necklace(parse_free_element(a, text));
}

} // namespace necklace
