#pragma once

// Words in the generators a1, a2, ...: "a1..a10 a11^2 a10..a1", "(a1 a2 a3)^4".

#include "eislat/monodromy.hpp"

#include <string>
#include <vector>

namespace eislat {

struct Letter {
    std::size_t generator = 0;  // 1-based
    long power = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Expands ranges and parenthesised powers. Throws std::invalid_argument with
/// the offending position on malformed input.
Word parse_word(const std::string& text);

/// Sum of |power| over the letters.
std::size_t word_length(const Word& w);

std::string to_string(const Word& w);

/// Evaluates with a_i the w-reflection in e_i; negative powers use the inverse.
/// Throws std::invalid_argument for a generator index beyond the lattice rank.
GroupElt eval_word(const Ambient& g, const Word& w);

}  // namespace eislat
