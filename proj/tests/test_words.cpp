#include "doctest.h"

#include "motzkin/words.hpp"

using namespace motzkin;

TEST_CASE("motzkin words of small length")
{
    std::vector<Word> four{{1, 1, 1, 1}, {1, 1, 2, 1}, {1, 2, 1, 1}, {1, 2, 2, 1}};
    CHECK(motzkin_words(4) == four);
    CHECK(motzkin_words(1) == std::vector<Word>{{1}});
    CHECK(motzkin_words(2) == std::vector<Word>{{1, 1}});
    CHECK(motzkin_words(3, 2) == std::vector<Word>{{2, 2, 2}, {2, 3, 2}});
}

TEST_CASE("word predicates")
{
    CHECK(is_motzkin(parse_word("12321")));
    CHECK_FALSE(is_motzkin(parse_word("1231")));
    CHECK_FALSE(is_motzkin(parse_word("1331")));
    CHECK_FALSE(is_motzkin(parse_word("2112")));
    CHECK(is_motzkin(parse_word("2332")));
    CHECK_FALSE(is_reduced(parse_word("2332")));
    CHECK(height(parse_word("343")) == 3);
    CHECK(reduce(parse_word("2332")) == parse_word("1221"));
    CHECK(shifted(parse_word("121"), 2) == parse_word("343"));
    CHECK(format_word(parse_word("12221")) == "12221");
}

TEST_CASE("labels restrict letters")
{
    CHECK(respects_labels(parse_word("1221"), {1, 2, 2, 1}));
    CHECK_FALSE(respects_labels(parse_word("1211"), {1, 1, 2, 2}));
    CHECK(labeled_words(4, {1, 1, 2, 2}) == std::vector<Word>{{1, 1, 1, 1}});
}

TEST_CASE("tableaux with at most three rows")
{
    CHECK(format_tableau(to_tableau(parse_word("12321"))) == "[[1,2],[3,4]]");
    CHECK(format_tableau(to_tableau(parse_word("12221"))) == "[[1,3],[2],[4]]");
    CHECK(format_tableau(to_tableau(parse_word("11111"))) == "[[1,2,3,4]]");
    CHECK(from_tableau(parse_tableau("[[1,4],[2],[3]]")) == parse_word("12211"));
    CHECK(standard_tableaux(4, 3).size() == 9);
    for (const auto& w : motzkin_words(7))
        CHECK(from_tableau(to_tableau(w)) == w);
    CHECK_FALSE(is_standard(parse_tableau("[[2,1]]")));
}
