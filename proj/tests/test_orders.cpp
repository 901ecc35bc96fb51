#include "doctest.h"
#include "drinfeld/errors.hpp"
#include "drinfeld/orders.hpp"

using namespace drinfeld;

namespace {

struct Rank3F16 {
    std::shared_ptr<FieldTower const> k;
    KElem t;
    std::shared_ptr<FrobeniusProfile const> P;
    std::shared_ptr<EndRing const> E;
    SkewPoly e2, e3;

    Rank3F16()
        : k(FieldTower::make({2, {0, 1}, {{1}, {1}, {0}, {0}, {1}}})), t(k->generator()),
          P(std::make_shared<FrobeniusProfile const>(DrinfeldModule(k, sk("t+t^3*tau^2+tau^3")))),
          E(EndRing::compute(P)), e2(sk("1+tau^4")),
          e3(sk("t^3+t^2+t+(t^3+t^2+1)*tau^2+(t^3+t)*tau^3+(t^3+t^2)*tau^4+tau^5"))
    {
    }

    SkewPoly sk(char const * s) const { return SkewPoly::parse(*k, s, k->generator()); }
    APoly A(char const * s) const { return APoly::parse(k->fq(), s); }
    FVec a(char const * s) const { return P->frobeniusField()->fromA(A(s)); }
};

} // namespace

TEST_CASE("rank 3 module over F_16: endomorphism ring")
{
    Rank3F16 ex;
    auto const & f = *ex.P->frobeniusField();
    DrinfeldModule const & phi = ex.P->module();
    CHECK(ex.E->rank() == 3);
    for (auto const & w : ex.E->basis())
        CHECK(w * phi.phiT() == phi.phiT() * w);

    // skew-side oracle for the relations
    auto phiA = [&](char const * s) { return phi.evalA(ex.A(s)); };
    CHECK(ex.e2 * phi.phiT() == phi.phiT() * ex.e2);
    CHECK(ex.e3 * phi.phiT() == phi.phiT() * ex.e3);
    CHECK(ex.e2 * ex.e3 == phiA("(T+1)^3") + phiA("T+1") * ex.e3);
    CHECK(ex.e2 * ex.e2 == phiA("T+1") * ex.e3);
    CHECK(ex.e3 * ex.e3 == phiA("(T+1)^3") + phiA("(T+1)^2") * ex.e2 + phiA("T+1") * ex.e3);

    auto x2 = ex.E->fromSkew(ex.e2);
    auto x3 = ex.E->fromSkew(ex.e3);
    REQUIRE(x2);
    REQUIRE(x3);
    CHECK(ex.E->toSkew(*x2) == ex.e2);
    CHECK(ex.E->toSkew(*x3) == ex.e3);
    CHECK(f.mul(*x2, *x3) == ex.a("(T+1)^3") + f.mul(ex.a("T+1"), *x3));
    CHECK(f.mul(*x2, *x2) == f.mul(ex.a("T+1"), *x3));
    CHECK(f.mul(*x3, *x3) ==
          ex.a("(T+1)^3") + f.mul(ex.a("(T+1)^2"), *x2) + f.mul(ex.a("T+1"), *x3));

    ALattice const B = ALattice::fromGenerators(f.field(), 3, {f.one(), *x2, *x3});
    CHECK(B == ex.E->lattice());
    CHECK(ex.E->indexOverAPi() == ex.A("T+1"));
    CHECK(!ex.E->isAPi());
    CHECK(f.norm(f.pi()).num().monic() == ex.A("T^4+T+1"));

    // I = ((T+1)^3, e2, e3) in the basis (1, e2, e3)
    FracIdeal const I = FracIdeal::generatedBy(ex.E->order(), {ex.a("(T+1)^3"), *x2, *x3});
    RatMatrix const Binv = RatMatrix::fromColumns(f.field(), {f.one(), *x2, *x3}).inverse();
    std::vector<FVec> cols;
    for (auto const & c : I.basis())
        cols.push_back(Binv.apply(c));
    ALattice const H = ALattice::fromGenerators(f.field(), 3, cols);
    CHECK(H.den().isOne());
    CHECK(H.entry(0, 0) == ex.A("(T+1)^3"));
    CHECK(H.entry(1, 1).isOne());
    CHECK(H.entry(2, 2).isOne());
    CHECK(H.entry(0, 1).isZero());
    CHECK(H.entry(0, 2).isZero());
    CHECK(H.entry(1, 2).isZero());

    CHECK(!isGorensteinAt(*ex.E->order(), ex.A("T+1")));
    CHECK(isGorensteinAt(*ex.E->order(), ex.A("T")));
    CHECK(isGorenstein(*orderAPi(*ex.P)));
}

TEST_CASE("A[pi] is the whole ring for m = x^2+x+T")
{
    auto k = FieldTower::primeTower(2, 1);
    auto const & F = k->fq();
    int found = 0;
    for (std::uint32_t t = 0; t < 2; ++t)
        for (std::uint32_t g1 = 0; g1 < 2; ++g1) {
            SkewPoly phiT(*k, {KElem{t}, KElem{g1}, k->one()});
            auto P = std::make_shared<FrobeniusProfile const>(DrinfeldModule(k, phiT));
            if (P->m() != std::vector<APoly>{APoly::var(F), APoly::constant(F, 1), APoly::constant(F, 1)})
                continue;
            ++found;
            auto E = EndRing::compute(P);
            CHECK(E->isAPi());
            CHECK(E->indexOverAPi().isOne());
        }
    CHECK(found >= 1);
}

TEST_CASE("tau^2 over F_27 has End = A[sqrt T]")
{
    auto k = FieldTower::primeTower(3, 3);
    auto const & F = k->fq();
    auto P = std::make_shared<FrobeniusProfile const>(DrinfeldModule(k, SkewPoly::tau(*k, 2)));
    auto E = EndRing::compute(P);
    auto const & f = *P->frobeniusField();
    CHECK(E->rank() == 2);
    auto y = E->fromSkew(SkewPoly::tau(*k, 1));
    REQUIRE(y);
    CHECK(f.mul(*y, *y) == f.fromA(APoly::var(F)));
    CHECK(E->indexOverAPi() == APoly::var(F));
    CHECK(isGorenstein(*E->order()));
    CHECK(E->lattice() == ALattice::fromGenerators(F, 2, {f.one(), *y}));
}

TEST_CASE("non-commutative endomorphism ring is rejected")
{
    auto k = FieldTower::primeTower(3, 2);
    auto P = std::make_shared<FrobeniusProfile const>(DrinfeldModule(k, SkewPoly::tau(*k, 2)));
    CHECK(P->s() == 1);
    CHECK_THROWS_AS(EndRing::compute(P), NonCommutativeEndomorphismRing);
}

TEST_CASE("lattice index of T*L")
{
    auto k = FieldTower::primeTower(2, 1);
    auto const & F = k->fq();
    RatFunc const T(APoly::var(F));
    std::vector<FVec> g{{T, RatFunc::one(F), RatFunc::zero(F)},
                        {RatFunc::zero(F), T * T + RatFunc::one(F), T},
                        {RatFunc::one(F), RatFunc::zero(F), RatFunc::one(F)}};
    ALattice const L = ALattice::fromGenerators(F, 3, g);
    CHECK(latticeIndex(L, L.scaled(T)) == APoly::var(F).pow(3));
}

TEST_CASE("prime factors")
{
    auto k = FieldTower::primeTower(3, 1);
    auto const & F = k->fq();
    APoly const a = APoly::parse(F, "(T+1)^3*(T^2+1)*T");
    auto pf = primeFactors(a);
    REQUIRE(pf.size() == 3);
    CHECK(pf[0] == APoly::parse(F, "T"));
    CHECK(pf[1] == APoly::parse(F, "T+1"));
    CHECK(pf[2] == APoly::parse(F, "T^2+1"));
}

TEST_CASE("ideals and linear equivalence over F_16")
{
    Rank3F16 ex;
    auto const & f = *ex.P->frobeniusField();
    auto O = ex.E->order();
    auto x3 = *ex.E->fromSkew(ex.e3);
    FracIdeal const unit = FracIdeal::unit(O);
    FracIdeal const P1 = FracIdeal::principal(O, x3 + f.one());
    CHECK(idealNorm(P1).num() == f.norm(x3 + f.one()).num().monic());
    auto r = isPrincipal(*ex.E, P1);
    REQUIRE(r.status == LinEquivStatus::Yes);
    CHECK(idealEq(unit.scaled(*r.witness), P1));

    auto ideals = enumerateIntegralIdeals(O, 2);
    CHECK(!ideals.empty());
    CHECK(idealEq(ideals.front(), unit));
    for (auto const & I : ideals) {
        CHECK(I.isIntegral());
        CHECK(idealNorm(I).num().degree() <= 2);
        auto const res = linEquiv(*ex.E, I, I.scaled(x3 + ex.a("T")));
        CHECK(res.status == LinEquivStatus::Yes);
    }
    // every pair of distinct ideals of norm degree <= 2: multiplicator ring agrees with equivalence
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
            auto res = linEquiv(*ex.E, ideals[i], ideals[j]);
            CHECK(res.status != LinEquivStatus::Unknown);
            if (res.status == LinEquivStatus::Yes) {
                CHECK(idealEq(ideals[j].scaled(*res.witness), ideals[i]));
                CHECK(*multiplicatorRing(ideals[i]) == *multiplicatorRing(ideals[j]));
            }
        }
}
