#include "topsnut/noise.hpp"

#include <algorithm>
#include <cctype>

#include "topsnut/error.hpp"
#include "topsnut/rng.hpp"

namespace topsnut {

SubstitutionTable parse_substitution(const std::string& descr) {
    SubstitutionTable t;
    std::string entry;
    auto flush = [&]() {
        std::string e;
        for (char c : entry)
            if (!std::isspace(static_cast<unsigned char>(c))) e.push_back(c);
        entry.clear();
        if (e.empty()) return;
        auto eq = e.find('=');
        if (eq == std::string::npos || eq != 1)
            fail("NonDecodable", "substitution entry needs the form <letter>=<digits>: " + e);
        t.rules.emplace_back(e.substr(2), e[0]);
    };
    for (char c : descr) {
        if (c == ',') flush();
        else entry.push_back(c);
    }
    flush();
    check_decodable(t);
    return t;
}

void check_decodable(const SubstitutionTable& t) {
    for (const auto& [key, letter] : t.rules) {
        if (std::isdigit(static_cast<unsigned char>(letter)) ||
            !std::isalpha(static_cast<unsigned char>(letter)))
            fail("NonDecodable", std::string("substitution letter must be a letter: ") + letter);
        if (key.empty()) fail("NonDecodable", "empty substitution key");
        for (char c : key)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail("NonDecodable", "substitution key must be digits: " + key);
    }
    for (std::size_t i = 0; i < t.rules.size(); ++i)
        for (std::size_t j = i + 1; j < t.rules.size(); ++j) {
            if (t.rules[i].second == t.rules[j].second)
                fail("NonDecodable",
                     std::string("letter used twice: ") + t.rules[i].second);
            const std::string &a = t.rules[i].first, &b = t.rules[j].first;
            if (a == b) fail("NonDecodable", "key used twice: " + a);
            if (a.compare(0, b.size(), b) == 0 || b.compare(0, a.size(), a) == 0)
                fail("NonDecodable", "keys not prefix-free: " + a + " vs " + b);
        }
}

std::string substitute(const TbPaw& d, const SubstitutionTable& t) {
    std::string out;
    for (const Token& tok : d) {
        std::string r = tok.render();
        bool hit = false;
        for (const auto& [key, letter] : t.rules)
            if (key == r) {
                out.push_back(letter);
                hit = true;
                break;
            }
        if (!hit) out += r;
    }
    return out;
}

std::string unsubstitute(const std::string& s, const SubstitutionTable& t) {
    std::string out;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            out.push_back(c);
            continue;
        }
        bool hit = false;
        for (const auto& [key, letter] : t.rules)
            if (letter == c) {
                out += key;
                hit = true;
                break;
            }
        if (!hit) fail("NonDecodable", std::string("no rule for letter: ") + c);
    }
    return out;
}

std::string insert_letters(const std::string& s, std::uint64_t seed, int count) {
    Lcg rng(seed);
    std::string out = s;
    for (int i = 0; i < count; ++i) {
        std::size_t pos = rng.below(out.size() + 1);
        char letter = static_cast<char>('a' + rng.below(26));
        out.insert(out.begin() + pos, letter);
    }
    return out;
}

std::string strip_letters(const std::string& s) {
    std::string out;
    for (char c : s)
        if (std::isdigit(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace topsnut
