#include "doctest.h"
#include "drinfeld/apoly.hpp"
#include "drinfeld/errors.hpp"

using namespace drinfeld;

TEST_CASE("gcd is monic")
{
    FqField F3(3, {0, 1});
    APoly a = APoly::parse(F3, "T^2-1");
    APoly b = APoly::parse(F3, "T-1");
    CHECK(gcd(a, b) == APoly::parse(F3, "T+2"));
    CHECK(gcd(a, b).toString() == "T+2");
    CHECK(gcd(a.scaled(F3.fromInt(2)), b.scaled(F3.fromInt(2))).isMonic());
}

TEST_CASE("(T+1)^3 over F_2")
{
    FqField F2(2, {0, 1});
    APoly x = APoly::parse(F2, "T+1");
    CHECK((x * x * x).toString() == "T^3+T^2+T+1");
    CHECK(x.pow(3) == x * x * x);
}

TEST_CASE("long division over F_2")
{
    FqField F2(2, {0, 1});
    auto [q, r] = divmod(APoly::parse(F2, "T^4+T+1"), APoly::parse(F2, "T^2+1"));
    CHECK(q.toString() == "T^2+1");
    CHECK(r.toString() == "T");
    CHECK_THROWS_AS(divmod(q, APoly(F2)), DivisionByZero);
}

TEST_CASE("xgcd and powmod")
{
    FqField F5(5, {0, 1});
    APoly a = APoly::parse(F5, "T^5+3*T^2+1");
    APoly b = APoly::parse(F5, "T^3+T+4");
    XGcd x = xgcd(a, b);
    CHECK(x.s * a + x.t * b == x.g);
    CHECK(x.g == gcd(a, b));
    APoly m = APoly::parse(F5, "T^2+2");
    APoly naive = APoly::constant(F5, 1);
    for (int i = 0; i < 13; ++i)
        naive = naive * b % m;
    CHECK(powmod(b, 13, m) == naive);
}

TEST_CASE("rational functions reduce")
{
    FqField F2(2, {0, 1});
    APoly t1 = APoly::parse(F2, "T+1");
    RatFunc f(t1 * t1, t1);
    CHECK(f.isPolynomial());
    CHECK(f.num() == t1);
    RatFunc g(APoly::constant(F2, 1), t1);
    CHECK((g + g).isZero());
    CHECK((f * g).toString() == "1");
    CHECK(f.inv().toString() == "(1)/(T+1)");
}

TEST_CASE("parser")
{
    FqField F3(3, {0, 1});
    CHECK(APoly::parse(F3, "x^4-x^3+2", "x").toString("x") == "x^4+2*x^3+2");
    CHECK(APoly::parse(F3, "3*T+1").toString() == "1");
    CHECK_THROWS_AS(APoly::parse(F3, "T^"), InputError);
    CHECK_THROWS_AS(APoly::parse(F3, "Q+1"), InputError);
}
