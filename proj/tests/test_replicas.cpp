#include "doctest.h"

#include "motzkin/replicas.hpp"

using namespace motzkin;

TEST_CASE("expectation of single replicas")
{
    CHECK(expectation(replica(1, 1, 1)).str() == "(m_1(x1))*p_1");
    CHECK(expectation(replica(1, 1, 2)).str() == "(m_1(x1))*p_2");
    CHECK(phi(replica(1, 2, 1)) == Poly::symbol(Kind::m, 2, {1}));
    CHECK(phi(replica(1, 1, 2)).is_zero());
}

TEST_CASE("alternating moments")
{
    auto x = product({replica(1, 1, 1), replica(2, 2, 2), replica(3, 1, 1)});
    CHECK(expectation(x).str() == "(-m_1(x1)*m_1(x3)*m_1(y2) + m_2(x1,x3)*m_1(y2))*p_1");
    CHECK(phi(x).str() == "-m_1(x1)*m_1(x3)*m_1(y2) + m_2(x1,x3)*m_1(y2)");
    auto y = product({replica(1, 1, 1), replica(2, 2, 1), replica(3, 1, 1)});
    CHECK(phi(y) == Poly::symbol(Kind::m, 1, {1}) * Poly::symbol(Kind::m, 2, {2}) * Poly::symbol(Kind::m, 1, {3}));
    // a color jump of two is never admissible
    CHECK(expectation(product({replica(1, 1, 1), replica(2, 2, 3), replica(3, 1, 1)})).is_zero());
}

TEST_CASE("projections")
{
    CHECK(equivalent(p_proj(2) * p_proj(2), p_proj(2)));
    CHECK(equivalent(p_proj(1) * p_proj(2), ReplicaElement()));
    CHECK(equivalent(e_proj(2), p_proj(1) + p_proj(2)));
    CHECK(expectation(p_proj(3)) == BElement::p(3));
}

TEST_CASE("B-valued algebra")
{
    auto a = BElement::p(1, Poly(2));
    auto b = BElement::e(2);
    CHECK(a * b == BElement::p(1, Poly(2)));
    CHECK((BElement::p(1) * BElement::p(2)).is_zero());
    CHECK(BElement::e(2).zeta() == Poly(1));
    CHECK(BElement::p(2).zeta().is_zero());
}

TEST_CASE("replica cumulants")
{
    std::vector<ReplicaElement> args{replica(1, 1, 1), replica(2, 2, 2), replica(3, 1, 1)};
    CHECK(K_rep(parse_word("121"), args).is_zero());
    CHECK(K_rep(parse_word("121"), args) == K_closed_form_rep(parse_word("121"), args));
    CHECK(B_rep(parse_word("11"), {replica(1, 1, 1), replica(2, 2, 1)}).is_zero());
    auto same = std::vector<ReplicaElement>{replica(1, 1, 1), replica(2, 1, 1)};
    CHECK(B_rep(parse_word("11"), same)
          == BElement::p(1, Poly::symbol(Kind::m, 1, {1, 2}) - Poly::symbol(Kind::m, 1, {1}) * Poly::symbol(Kind::m, 1, {2})));
}
