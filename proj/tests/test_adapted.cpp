#include "doctest.h"

#include "motzkin/adapted.hpp"

using namespace motzkin;

TEST_CASE("lattice of 11221")
{
    Word w = parse_word("11221");
    CHECK(enumerate_adapted(w, AdaptedClass::all).size() == 10);
    CHECK(enumerate_adapted(w, AdaptedClass::irr).size() == 5);
    auto lat = lattice_of(w);
    CHECK(lat.covers.size() == 17);
    CHECK(format_adapted(zero_hat(w)) == "{1},{2,5},{3},{4} on 11221");
    CHECK(one_hat(w).base == coarsest(5));
}

TEST_CASE("irreducible counts for words of length five")
{
    std::map<std::string, size_t> expected{{"11111", 1}, {"11121", 2}, {"11211", 2}, {"12111", 2}, {"12121", 4},
                                           {"11221", 5}, {"12211", 5}, {"12221", 13}, {"12321", 4}};
    for (const auto& [s, c] : expected)
        CHECK(enumerate_adapted(parse_word(s), AdaptedClass::irr).size() == c);
}

TEST_CASE("adapted predicate")
{
    Word w = parse_word("12221");
    CHECK(is_adapted(parse_partition(5, "{1,5},{2,3,4}"), w));
    CHECK(is_adapted(parse_partition(5, "{1,2,5},{3},{4}"), w));
    CHECK_FALSE(is_adapted(parse_partition(5, "{1,5},{2,4},{3}"), w));
    CHECK(is_adapted(parse_partition(5, "{1,5},{2,4},{3}"), parse_word("12321")));
    CHECK_FALSE(is_adapted(parse_partition(4, "{1,3},{2,4}"), parse_word("1111")));
    CHECK(format_adapted(zero_hat(parse_word("12321"))) == "{1,5},{2,4},{3} on 12321");
}

TEST_CASE("monotone partitions")
{
    Word w = parse_word("12321");
    CHECK(is_monotone(parse_partition(5, "{1,5},{2,4},{3}"), w));
    CHECK_FALSE(is_monotone(parse_partition(5, "{1,2,4,5},{3}"), w));
    CHECK(enumerate_adapted(parse_word("1111"), AdaptedClass::monotone).size() == 8);
}

TEST_CASE("closure and joins agree with the predicate")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : motzkin_words(n))
            CHECK(coarsening_closure(w) == enumerate_adapted(w, AdaptedClass::all));
    Word w = parse_word("12221");
    auto a = adapted(parse_partition(5, "{1,5},{2,3},{4}"), w);
    auto b = adapted(parse_partition(5, "{1,5},{2},{3,4}"), w);
    CHECK(format_adapted(join_adapted(a, b)) == "{1,5},{2,3,4} on 12221");
}

TEST_CASE("interval splits of a word")
{
    CHECK(interval_splits(parse_word("11211")).size() == 4);
    CHECK(interval_splits(parse_word("121")).size() == 1);
}

TEST_CASE("dot export")
{
    auto dot = to_dot(lattice_of(parse_word("1221")), "NC(1221)");
    CHECK(dot.rfind("digraph \"NC(1221)\"", 0) == 0);
    CHECK(dot == to_dot(lattice_of(parse_word("1221")), "NC(1221)"));
}
