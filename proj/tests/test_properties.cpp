#include "doctest.h"
#include "properties.hpp"

using namespace drinfeld;

TEST_CASE("skew division: identity and degree additivity")
{
    auto const o = props::skewDivision(1000, 101);
    CHECK(o.cases >= 1000);
    CHECK_MESSAGE(o.ok(), o.first);
}

TEST_CASE("skew rgcd: divisibility and Bezout certificates")
{
    auto const o = props::skewGcd(1000, 202);
    CHECK(o.cases >= 1000);
    CHECK_MESSAGE(o.ok(), o.first);
}

TEST_CASE("Frobenius profiles: m(pi) = 0, reduction mod pi, lhs <= rhs")
{
    auto const o = props::profiles(1000, 303);
    CHECK(o.minpoly.cases >= 1000);
    CHECK_MESSAGE(o.minpoly.ok(), o.minpoly.first);
    CHECK_MESSAGE(o.reduction.ok(), o.reduction.first);
    CHECK_MESSAGE(o.inequality.ok(), o.inequality.first);
}

TEST_CASE("Hermite normal form: canonical and index multiplicative")
{
    auto const o = props::hermite(1000, 404);
    CHECK(o.cases >= 1000);
    CHECK_MESSAGE(o.ok(), o.first);
}
