#pragma once

#include "necklace/alphabet.hpp"
#include "necklace/word.hpp"

#include <cstdint>
#include <random>

namespace necklace {

/// Seeded source of random words for property checks.
class WordSampler {
public:
    explicit WordSampler(std::uint64_t seed = 0) : rng_(seed) {}

    Word word(const Alphabet& a, std::size_t length)
    {
        std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
        std::vector<Letter> out;
        out.reserve(length);
        for (std::size_t i = 0; i < length; ++i)
            out.push_back(a.letter(pick(rng_)));
        return Word(std::move(out));
    }

    Word word_up_to(const Alphabet& a, std::size_t min_length, std::size_t max_length)
    {
        return word(a, integer(min_length, max_length));
    }

    std::size_t integer(std::size_t lo, std::size_t hi)
    {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace necklace
