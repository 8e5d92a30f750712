#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

namespace topsnut {

// One cell of an output string: either a single label or a set of labels.
// Sets render as their elements in ascending order, so values are kept
// sorted and tokens compare by value list alone.
struct Token {
    std::vector<int> vals;

    static Token num(int x) { return Token{{x}}; }
    static Token set(std::vector<int> xs) {
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        return Token{std::move(xs)};
    }

    bool single() const { return vals.size() == 1; }
    int value() const { return vals.front(); }

    std::string render() const {
        std::string s;
        for (int x : vals) s += std::to_string(x);
        return s;
    }

    auto operator<=>(const Token&) const = default;
};

// Token sequence; "uplus" is plain concatenation, kept explicit so the
// emitters read like the block algebra they implement.
using TbPaw = std::vector<Token>;

inline std::string render(const TbPaw& d) {
    std::string s;
    for (const Token& t : d) s += t.render();
    return s;
}

inline TbPaw& uplus_append(TbPaw& a, const TbPaw& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline TbPaw uplus(TbPaw a, const TbPaw& b) {
    uplus_append(a, b);
    return a;
}

inline TbPaw reversed(TbPaw d) {
    std::reverse(d.begin(), d.end());
    return d;
}

inline TbPaw toks(std::initializer_list<int> xs) {
    TbPaw d;
    for (int x : xs) d.push_back(Token::num(x));
    return d;
}

}  // namespace topsnut
