#include "doctest.h"

#include "motzkin/convolution.hpp"

using namespace motzkin;

TEST_CASE("first moments add")
{
    CHECK(boxplus_total({1}) == Poly::symbol(Kind::m, 1, {1}) + Poly::symbol(Kind::m, 2, {1}));
    CHECK(delta({1}).is_zero());
    CHECK(delta({1, 2}).is_zero());
    CHECK(boxplus_w({}, {}) == Poly(1));
}

TEST_CASE("free and Boolean products")
{
    CHECK(free_product_moment({1, 2, 1, 2}, {1, 2, 1, 2}).str()
          == "-m_1(x1)^2*m_1(y2)^2 + m_1(x1)^2*m_2(y2,y2) + m_2(x1,x1)*m_1(y2)^2");
    CHECK(boolean_product_moment({1, 2, 1, 2}, {1, 2, 1, 2}).str() == "m_1(x1)^2*m_1(y2)^2");
    CHECK(delta({1, 2, 1}).str()
          == "-m_1(x1)^2*m_1(y2) + m_2(x1,x1)*m_1(y2) - m_1(x2)*m_1(y1)^2 + m_1(x2)*m_2(y1,y1)");
}

TEST_CASE("parts by path")
{
    auto parts = boxplus_by_path({1, 1, 1});
    REQUIRE(parts.size() == 2);
    CHECK(parts[1].second.str()
          == "-m_1(x1)^2*m_1(y1) - m_1(x1)*m_1(y1)^2 + m_1(x1)*m_2(y1,y1) + m_2(x1,x1)*m_1(y1)");
    Poly sum;
    for (const auto& [w, p] : parts)
        sum += p;
    CHECK(sum == boxplus_total({1, 1, 1}));
    for (const auto& w : {Word{1, 2, 1}, Word{1, 2, 2, 1}, Word{1, 1, 2, 1}})
        for (const auto& vars : {std::vector<int>(w.size(), 1), std::vector<int>{1, 2, 1, 2}})
            if (vars.size() == w.size()) {
                CHECK(boxplus_w(w, vars) == boxplus_w_monotone(w, vars));
                CHECK(boxplus_w(w, vars) == boxplus_w_nested(w, vars));
            }
}

TEST_CASE("semicircle plus Poisson")
{
    auto mu = univariate_distribution({0, 1, 0, 2});
    auto nu = univariate_distribution({1, 2, 5, 15});
    std::vector<int> vars{1, 1, 1, 1};
    CHECK(evaluate(boxplus_total(vars), mu, nu) == 27);
    std::vector<Rational> parts;
    for (const auto& [w, p] : boxplus_by_path(vars))
        parts.push_back(evaluate(p, mu, nu));
    CHECK(parts == std::vector<Rational>{22, 1, 1, 3});
}

TEST_CASE("distribution errors")
{
    auto mu = univariate_distribution({1, 2});
    CHECK(mu.moment({}) == 1);
    CHECK(mu.moment({1, 1}) == 2);
    CHECK_THROWS_AS(mu.moment({1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(mu.variable("b"), std::invalid_argument);
    CHECK_THROWS_AS(boxplus_w({1, 3, 1}, {1, 1, 1}), std::invalid_argument);
}
