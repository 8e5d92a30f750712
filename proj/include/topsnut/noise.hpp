#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "topsnut/token.hpp"

namespace topsnut {

// Letter-for-token substitution rules. Keys are rendered token strings; each
// maps to one non-digit letter. Decoding needs distinct letters and a
// prefix-free key set.
struct SubstitutionTable {
    std::vector<std::pair<std::string, char>> rules;
};

// "x=11,y=22,z=33"; whitespace around entries is ignored
SubstitutionTable parse_substitution(const std::string& descr);

// throws NonDecodable when the table cannot be inverted
void check_decodable(const SubstitutionTable& t);

// Whole tokens whose rendering matches a key become that key's letter;
// everything else renders as digits.
std::string substitute(const TbPaw& d, const SubstitutionTable& t);

// Inverse on rendered strings: letters expand back to their keys.
std::string unsubstitute(const std::string& s, const SubstitutionTable& t);

// Seeded letter noise: `count` lowercase letters at pseudo-random positions.
std::string insert_letters(const std::string& s, std::uint64_t seed, int count);

// Drops every non-digit, undoing insert_letters.
std::string strip_letters(const std::string& s);

}  // namespace topsnut
