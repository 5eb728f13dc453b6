#include "doctest.h"

#include "motzkin/partitions.hpp"

using namespace motzkin;

TEST_CASE("partition counts")
{
    CHECK(enumerate_partitions(4, PartitionClass::all).size() == 15);
    CHECK(enumerate_partitions(4, PartitionClass::nc).size() == 14);
    CHECK(enumerate_partitions(5, PartitionClass::nc_irr).size() == 14);
    CHECK(enumerate_partitions(5, PartitionClass::interval).size() == 16);
}

TEST_CASE("partition predicates")
{
    auto crossing = parse_partition(4, "{1,3},{2,4}");
    CHECK_FALSE(is_noncrossing(crossing));
    auto p = parse_partition(5, "{1,5},{2,4},{3}");
    CHECK(is_noncrossing(p));
    CHECK(is_irreducible(p));
    CHECK_FALSE(is_interval(p));
    CHECK(refines(finest(5), p));
    CHECK(refines(p, coarsest(5)));
    CHECK(format_partition(p) == "{1,5},{2,4},{3}");
}

TEST_CASE("noncrossing join")
{
    auto a = parse_partition(4, "{1,3},{2},{4}");
    auto b = parse_partition(4, "{1},{2,4},{3}");
    CHECK(join_nc(a, b) == coarsest(4));
    auto c = parse_partition(4, "{1,2},{3},{4}");
    CHECK(format_partition(join_nc(a, c)) == "{1,2,3},{4}");
}

TEST_CASE("nesting depths")
{
    auto nest = nesting(parse_partition(5, "{1,5},{2,4},{3}"));
    CHECK(nest[0].depth == 1);
    CHECK(nest[1].depth == 2);
    CHECK(nest[1].outer == 0);
    CHECK(nest[2].depth == 3);
}
