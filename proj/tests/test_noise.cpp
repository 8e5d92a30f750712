#include <doctest.h>

#include "topsnut/error.hpp"
#include "topsnut/noise.hpp"
#include "topsnut/token.hpp"

using namespace topsnut;

namespace {

TbPaw doc_tokens() {
    return toks({11, 1, 2, 3, 1, 34, 1, 34, 1, 4, 5, 1, 4, 5, 1, 56, 1, 56,
                 1, 6, 7, 11, 1, 34, 1, 2, 3, 11, 11, 2, 22, 1, 0, 1, 33});
}

}  // namespace

TEST_SUITE("noise") {

TEST_CASE("substitution table parsing") {
    auto t = parse_substitution("x=11, y=22 ,z=33");
    REQUIRE(t.rules.size() == 3);
    CHECK(t.rules[0].first == "11");
    CHECK(t.rules[0].second == 'x');
    CHECK_THROWS_AS(parse_substitution("xy=11"), Error);
    CHECK_THROWS_AS(parse_substitution("x=1a"), Error);
    CHECK_THROWS_AS(parse_substitution("x="), Error);
}

TEST_CASE("decodability guards") {
    CHECK_THROWS_AS(check_decodable(parse_substitution("x=11,x=22")), Error);
    CHECK_THROWS_AS(check_decodable(parse_substitution("x=11,y=11")), Error);
    // one key is a prefix of another: decoding would be ambiguous
    CHECK_THROWS_AS(check_decodable(parse_substitution("x=1,y=12")), Error);
    CHECK_NOTHROW(check_decodable(parse_substitution("x=11,y=22,z=33")));
}

TEST_CASE("token exact substitution") {
    auto table = parse_substitution("x=11,y=22,z=33,a=34,b=56");
    TbPaw d = doc_tokens();
    CHECK(render(d) == "1112313413414514515615616711134123111122210133");
    CHECK(substitute(d, table) == "x1231a1a1451451b1b167x1a123xx2y101z");
}

TEST_CASE("substitution only fires on whole tokens") {
    auto table = parse_substitution("x=11");
    // token 113 renders with "11" inside but is not the token "11"
    CHECK(substitute(toks({113, 11}), table) == "113x");
}

TEST_CASE("unsubstitute undoes substitute at the string level") {
    auto table = parse_substitution("x=11,y=22,z=33,a=34,b=56");
    TbPaw d = doc_tokens();
    CHECK(unsubstitute(substitute(d, table), table) == render(d));
    CHECK_THROWS_AS(unsubstitute("9q9", table), Error);
}

TEST_CASE("inserted letters strip back out") {
    std::string s = "037102512";
    std::string noisy = insert_letters(s, 99, 6);
    CHECK(noisy.size() == s.size() + 6);
    CHECK(noisy != s);
    CHECK(strip_letters(noisy) == s);
    CHECK(insert_letters(s, 99, 6) == noisy);  // same seed, same stream
    CHECK(insert_letters(s, 100, 6) != noisy);
}

}  // TEST_SUITE
