#include <random>

#include "doctest.h"
#include "drinfeld/apoly.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/skew.hpp"

using namespace drinfeld;

namespace {

std::shared_ptr<FieldTower const> f16()
{
    TowerSpec spec;
    spec.p = 2;
    spec.g = {{1}, {1}, {0}, {0}, {1}};
    return FieldTower::make(spec);
}

SkewPoly randomSkew(FieldTower const & k, std::mt19937_64 & rng, int deg)
{
    std::uniform_int_distribution<std::uint32_t> pick(0, k.size() - 1);
    std::vector<KElem> c(deg + 1);
    for (auto & x : c)
        x = KElem{pick(rng)};
    if (c.back().v == 0)
        c.back() = k.one();
    return SkewPoly(k, c);
}

} // namespace

TEST_CASE("commutation rule and centrality of tau^n")
{
    auto k = f16();
    KElem t = k->generator();
    SkewPoly tau = SkewPoly::tau(*k);
    SkewPoly a = SkewPoly::constant(*k, t);
    CHECK(tau * a == SkewPoly::monomial(*k, k->frobQ(t, 1), 1));
    SkewPoly pi = SkewPoly::tau(*k, 4);
    for (KElem x : k->elements())
        CHECK(pi * SkewPoly::constant(*k, x) == SkewPoly::constant(*k, x) * pi);
}

TEST_CASE("(t + tau^4)^2 over F_729 with t in F_9")
{
    auto k = FieldTower::primeTower(3, 6);
    KElem t = rootsInK(*k, APoly::parse(k->fq(), "T^2+T+2")).front();
    SkewPoly f = SkewPoly::parse(*k, "t+tau^4", t);
    KElem two = k->embed(k->fq().fromInt(2));
    SkewPoly expect(*k, {k->mul(t, t), {}, {}, {}, k->mul(two, t), {}, {}, {}, k->one()});
    CHECK(f * f == expect);
}

TEST_CASE("Bezout pair and factorization printed for the non-kernel ideal example")
{
    auto k = f16();
    KElem t = k->generator();
    auto P = [&](char const * s) { return SkewPoly::parse(*k, s, t); };
    SkewPoly e2 = P("1+tau^4");
    SkewPoly e3 = P("t^3+t^2+t+(t^3+t^2+1)*tau^2+(t^3+t)*tau^3+(t^3+t^2)*tau^4+tau^5");
    SkewPoly w = P("t^3+t+1+(t^3+t^2)*tau+(t+1)*tau^2+tau^3");
    SkewPoly u = P("(t^3+t^2)^2+(t^3+t^2)*tau");
    SkewPoly v = P("t^3+t^2");
    CHECK(u * e2 + v * e3 == w);
    CHECK(w.toString() == "(t^3+t+1)+(t^3+t^2)*tau+(t+1)*tau^2+tau^3");

    SkewPoly phiT = P("t+t^3*tau^2+tau^3");
    SkewPoly one = SkewPoly::one(*k);
    SkewPoly phiT1 = phiT + one;
    SkewPoly phiSq = phiT1 * phiT1;
    CHECK(phiSq == P("(t^2+1)+t^3*tau^2+(t^2+t+1)*tau^3+tau^4+t*tau^5+tau^6"));
    SkewDivMod qr = rdivmod(phiSq, w);
    CHECK(qr.rem.isZero());
    CHECK(qr.quo == P("t+(t^2+1)*tau+(t^2+t)*tau^2+tau^3"));

    SkewPoly phiCube = phiSq * phiT1;
    SkewPoly g = rgcd({phiCube, e2, e3});
    CHECK(g == w);
    SkewBezout bz = rgcdBezout({phiCube, e2, e3});
    CHECK(bz.cofactors[0] * phiCube + bz.cofactors[1] * e2 + bz.cofactors[2] * e3 == w);
}

TEST_CASE("rgcd edge cases")
{
    auto k = f16();
    std::mt19937_64 rng(7);
    SkewPoly f = randomSkew(*k, rng, 3);
    CHECK(rgcd({f, SkewPoly(*k)}) == f.monic());
    SkewPoly tau = SkewPoly::tau(*k);
    CHECK(rgcd({tau * f, tau * tau * f}) == (tau * f).monic());
    CHECK_THROWS_AS(rgcd({SkewPoly(*k)}), EmptyIdeal);
    CHECK_THROWS_AS(rdivmod(f, SkewPoly(*k)), DivisionByZero);
    auto [a, b] = bezout(f, f);
    CHECK(a * f + b * f == f.monic());
}

TEST_CASE("rdivmod reconstructs random constructions")
{
    auto k = FieldTower::primeTower(3, 3);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        SkewPoly g = randomSkew(*k, rng, 4);
        SkewPoly h = randomSkew(*k, rng, 3);
        SkewPoly r = randomSkew(*k, rng, 2);
        SkewDivMod qr = rdivmod(g * h + r, h);
        CHECK(qr.quo == g);
        CHECK(qr.rem == r);
        CHECK((g * h).degree() == g.degree() + h.degree());
    }
}

TEST_CASE("parser errors")
{
    auto k = f16();
    CHECK_THROWS_AS(SkewPoly::parse(*k, "t+", k->generator()), InputError);
    CHECK_THROWS_AS(SkewPoly::parse(*k, "(t", k->generator()), InputError);
    CHECK_THROWS_AS(SkewPoly::parse(*k, "y", k->generator()), InputError);
}
