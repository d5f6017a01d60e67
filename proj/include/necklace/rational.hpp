#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace necklace {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    if (s.front() == '+')
        s.erase(0, 1);
    const auto slash = s.find('/');
    const auto digits_ok = [](std::string_view part, bool allow_sign) {
        if (allow_sign && !part.empty() && part.front() == '-')
            part.remove_prefix(1);
        if (part.empty())
            return false;
        for (char c : part)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits_ok(s, true))
            throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
        return Rational(Integer(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    Integer d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

/// num/den in lowest terms (gmpxx does not canonicalize on construction).
inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

inline bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

} // namespace necklace
