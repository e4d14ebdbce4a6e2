#include <catch2/catch_amalgamated.hpp>

#include "xsq/word.hpp"

using namespace xsq;

TEST_CASE("free reduction cancels adjacent inverse pairs", "[word]") {
    Word a = Word::gen(0);
    Word b = Word::gen(1);
    CHECK((a * a.inverse()).empty());
    CHECK((a * b * b.inverse() * a.inverse()).empty());
    CHECK((a * b * b.inverse()) == a);
    CHECK(Word::comm(a, a).empty());
}

TEST_CASE("word parsing and formatting", "[word]") {
    std::vector<std::string> names{"a", "b"};
    CHECK(parse_word("a^2", names) == Word::gen(0) * Word::gen(0));
    CHECK(parse_word("abab", names) == parse_word("(ab)^2", names));
    CHECK(parse_word("a b a^-1 b^-1", names) == Word::comm(Word::gen(0), Word::gen(1)));
    CHECK(parse_word("1", names).empty());
    CHECK(parse_word("a a^-1", names).empty());
    CHECK(format_word(parse_word("a^3 b^-2", names), names) == "a^3*b^-2");
    CHECK(parse_word(format_word(parse_word("(ab^-1)^3", names), names), names) ==
          parse_word("(ab^-1)^3", names));
    CHECK_THROWS_AS(parse_word("c", names), parse_error);
    CHECK_THROWS_AS(parse_word("(ab", names), parse_error);
}

TEST_CASE("substitution is homomorphic", "[word]") {
    std::vector<Word> images{Word::gen(2) * Word::gen(3), Word::gen(3).inverse()};
    Word w = Word::gen(0) * Word::gen(1);
    Word expect = Word::gen(2) * Word::gen(3) * Word::gen(3).inverse();
    CHECK(w.substitute(images) == expect);
    Word u = Word::gen(0) * Word::gen(0).inverse();
    CHECK(u.substitute(images).empty());
}

TEST_CASE("exponent sums", "[word]") {
    std::vector<std::string> names{"a", "b"};
    auto s = parse_word("a^3 b^-1 a^-1", names).exponent_sums(2);
    CHECK(s == std::vector<long long>{2, -1});
}
