#include "doctest.h"

#include "motzkin/cumulants.hpp"

using namespace motzkin;

namespace {

Poly uni(Kind k, int n)
{
    return Poly::symbol(k, 0, univariate(n));
}

}

TEST_CASE("moments in free and Boolean cumulants")
{
    CHECK(express(Kind::m, Kind::r, 0, univariate(3)).str(default_name, true) == "r_1^3 + 3*r_1*r_2 + r_3");
    CHECK(express(Kind::r, Kind::beta, 0, univariate(3)).str(default_name, true) == "-beta_1*beta_2 + beta_3");
    CHECK(express(Kind::r, Kind::m, 0, univariate(2)) == uni(Kind::m, 2) - uni(Kind::m, 1) * uni(Kind::m, 1));
    CHECK(express(Kind::m, Kind::beta, 0, {1, 2})
          == Poly::symbol(Kind::beta, 0, {1, 2}) + Poly::symbol(Kind::beta, 0, {1}) * Poly::symbol(Kind::beta, 0, {2}));
}

TEST_CASE("round trips")
{
    for (int n = 1; n <= 6; ++n)
        for (auto [a, b] : {std::pair{Kind::m, Kind::r}, {Kind::m, Kind::beta}, {Kind::beta, Kind::r}})
            CHECK(convert(express(a, b, 0, univariate(n)), a) == uni(a, n));
    std::vector<int> args{1, 2, 1, 3};
    CHECK(convert(express(Kind::r, Kind::m, 0, args), Kind::r) == Poly::symbol(Kind::r, 0, args));
}

TEST_CASE("free cumulants split into Motzkin cumulants")
{
    auto table = free_decomposition(univariate(4), {0, 0, 0, 0});
    REQUIRE(table.size() == 4);
    CHECK(format_word(table[0].first) == "1111");
    CHECK(table[0].second.str(default_name, true) == "beta_4");
    CHECK(table[1].second.str(default_name, true) == "-beta_1*beta_3");
    CHECK(table[2].second.str(default_name, true) == "-beta_1*beta_3");
    CHECK(table[3].second.str(default_name, true) == "beta_1^2*beta_2 - beta_2^2");
    for (int n = 1; n <= 6; ++n) {
        Poly sum;
        for (const auto& [w, k] : free_decomposition(univariate(n), std::vector<int>(n, 0)))
            sum += k;
        CHECK(sum == express(Kind::r, Kind::beta, 0, univariate(n)));
    }
    CHECK(motzkin_k(parse_word("1221"), {1, 2, 3, 4}, {0, 0, 0, 0}).str()
          == "beta_2(a1,a4)*beta_1(a2)*beta_1(a3) - beta_2(a1,a4)*beta_2(a2,a3)");
    CHECK(motzkin_k(parse_word("121"), univariate(3), {1, 2, 1}).is_zero());
}

TEST_CASE("closed forms")
{
    auto k = K_closed_form(parse_word("1221"), default_args(4));
    REQUIRE(k.size() == 5);
    CHECK(k[0].sign == 1);
    CHECK(k[0].text == "B_1221(a1,a2,a3,a4)");
    CHECK(k[4].text == "B_11(a1B_2(a2)B_2(a3),a4)");
    auto b = B_inversion(parse_word("1211"), default_args(4));
    REQUIRE(b.size() == 2);
    CHECK(b[0].text == "E(a1a2a3a4)");
    CHECK(b[1].sign == -1);
    CHECK(b[1].text == "E(a1a2a3)E(a4)");
}
