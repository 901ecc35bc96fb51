#include <random>

#include "doctest.h"
#include "drinfeld/apoly.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/field.hpp"

using namespace drinfeld;

namespace {

std::shared_ptr<FieldTower const> tower(std::uint32_t p, std::vector<std::uint32_t> g)
{
    TowerSpec spec;
    spec.p = p;
    for (auto c : g)
        spec.g.push_back({c});
    return FieldTower::make(spec);
}

// Repeated multiplication, independent of the log tables.
KElem slowPow(FieldTower const & k, KElem a, unsigned long long e)
{
    KElem r = k.one();
    for (unsigned long long i = 0; i < e; ++i)
        r = k.mul(r, a);
    return r;
}

} // namespace

TEST_CASE("t^4 = t + 1 in F_2[x]/(x^4+x+1)")
{
    auto k = tower(2, {1, 1, 0, 0, 1});
    KElem t = k->generator();
    KElem t4 = k->mul(k->mul(t, t), k->mul(t, t));
    CHECK(t4 == k->fromDigits({FqElem{1}, FqElem{1}, FqElem{0}, FqElem{0}}));
    CHECK(k->toString(t4) == "t+1");
}

TEST_CASE("t^2 = 2t + 1 in F_3[x]/(x^2+x+2)")
{
    auto k = tower(3, {2, 1, 1});
    KElem t = k->generator();
    CHECK(k->mul(t, t) == k->fromDigits({FqElem{1}, FqElem{2}}));
    CHECK(k->toString(k->mul(t, t)) == "2*t+1");
}

TEST_CASE("frobQ fixes the subfield F_9 inside F_729")
{
    auto k = FieldTower::primeTower(3, 6);
    FqField const & F = k->fq();
    APoly P = APoly::parse(F, "T^2+T+2");
    auto roots = rootsInK(*k, P);
    REQUIRE(roots.size() == 2);
    for (KElem t : roots) {
        CHECK(k->frobQ(t, 4) == t);
        CHECK(slowPow(*k, t, 81) == t);
        CHECK(k->frobQ(t, 1) == slowPow(*k, t, 3));
    }
}

TEST_CASE("roots of T^4+T+1 in F_16")
{
    auto k = tower(2, {1, 1, 0, 0, 1});
    APoly P = APoly::parse(k->fq(), "T^4+T+1");
    auto roots = rootsInK(*k, P);
    CHECK(roots.size() == 4);
    for (KElem x : roots) {
        KElem v = k->add(k->add(slowPow(*k, x, 4), x), k->one());
        CHECK(v == k->zero());
    }
    CHECK(rootsInK(*k, APoly::var(k->fq())) == std::vector<KElem>{k->zero()});
}

TEST_CASE("enumeration has the right cardinality")
{
    auto k4 = FieldTower::primeTower(2, 2);
    CHECK(k4->elements().size() == 4);
    auto k9 = FieldTower::primeTower(3, 2);
    auto els = k9->elements();
    CHECK(els.size() == 9);
}

TEST_CASE("non-prime base field F_4 with k = F_16")
{
    TowerSpec spec;
    spec.p = 2;
    spec.h = {1, 1, 1};
    FqField F4(2, {1, 1, 1});
    auto g = firstIrreducible(F4, 2);
    for (FqElem c : g)
        spec.g.push_back(F4.coords(c));
    auto k = FieldTower::make(spec);
    CHECK(k->q() == 4);
    CHECK(k->size() == 16);
    KElem x = k->generator();
    CHECK(k->frobQ(x, 2) == x);
    CHECK(k->frobQ(x, 1) == slowPow(*k, x, 4));
}

TEST_CASE("field axioms and Frobenius on random samples")
{
    std::mt19937_64 rng(20240611);
    for (auto k : {FieldTower::primeTower(2, 5), FieldTower::primeTower(3, 4), FieldTower::primeTower(5, 3)}) {
        std::uniform_int_distribution<std::uint32_t> pick(0, k->size() - 1);
        for (int i = 0; i < 300; ++i) {
            KElem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
            CHECK(k->mul(k->one(), a) == a);
            CHECK(k->mul(a, k->add(b, c)) == k->add(k->mul(a, b), k->mul(a, c)));
            CHECK(k->frobQ(k->add(a, b), 1) == k->add(k->frobQ(a, 1), k->frobQ(b, 1)));
            CHECK(k->frobQ(k->mul(a, b), 1) == k->mul(k->frobQ(a, 1), k->frobQ(b, 1)));
            CHECK(k->frobQ(a, k->n()) == a);
            CHECK(k->frobQ(a, 0) == a);
            if (a != k->zero())
                CHECK(k->mul(a, k->inv(a)) == k->one());
            CHECK(k->fromDigits(k->digits(a)) == a);
        }
    }
}

TEST_CASE("errors")
{
    auto k = FieldTower::primeTower(2, 3);
    CHECK_THROWS_AS(k->inv(k->zero()), DivisionByZero);
    TowerSpec bad;
    bad.p = 2;
    bad.g = {{1}, {0}, {1}}; // x^2 + 1 = (x+1)^2
    CHECK_THROWS_AS(FieldTower::make(bad), InputError);
}
