#include "doctest.h"
#include "drinfeld/errors.hpp"
#include "drinfeld/profile.hpp"

using namespace drinfeld;

namespace {

struct Setup {
    std::shared_ptr<FieldTower const> k;
    KElem t;
};

Setup setup(std::uint32_t p, std::uint32_t n, char const * prime)
{
    auto k = FieldTower::primeTower(p, n);
    auto roots = rootsInK(*k, APoly::parse(k->fq(), prime));
    REQUIRE(!roots.empty());
    return {k, roots.front()};
}

FrobeniusProfile profile(Setup const & s, char const * phiT)
{
    return FrobeniusProfile(DrinfeldModule(s.k, SkewPoly::parse(*s.k, phiT, s.t)));
}

std::vector<APoly> bivariate(FqField const & F, char const * text, char const * inner)
{
    return parseBivariate(F, text, "x", inner);
}

} // namespace

TEST_CASE("supersingular tau^2 over F_27")
{
    auto s = setup(3, 3, "T");
    auto P = profile(s, "tau^2");
    CHECK(P.m() == bivariate(s.k->fq(), "x^2-T^3", "T"));
    CHECK(P.s() == 2);
    CHECK(P.NK() == 3);
    CHECK(P.H() == 2);
    CHECK(P.localMaximality().lhs == 2);
    CHECK(P.localMaximality().rhs == 3);
    CHECK_FALSE(P.isLocallyMaximal());
    CHECK(P.verifyMinpoly());
    CHECK(P.verifyReduction());
    auto c = P.closedFormChecks();
    CHECK_FALSE(c.ordinaryCondition);
    CHECK_FALSE(c.primeFieldCondition);
    CHECK(c.consistent);
}

TEST_CASE("q=3, n=8 locally maximal example")
{
    auto s = setup(3, 8, "T^2+T+2");
    auto P = profile(s, "t+tau+(2*t+1)*tau^2+2*tau^3+t*tau^4");
    CHECK(P.H() == 2);
    CHECK(P.mTilde() == bivariate(s.k->fq(), "x^4+2*x^3+2*x^2+(2*pi+1)*x+pi^2+pi+1", "pi"));
    CHECK(P.NK() == 4);
    CHECK(P.isLocallyMaximal());
    CHECK(P.verifyMinpoly());
    CHECK(P.verifyReduction());

    // With a monic leading term the same module has a degree 8 m~.
    auto printed = profile(s, "t+tau+(2*t+1)*tau^2+2*tau^3+tau^4");
    CHECK(printed.s() == 4);
    CHECK(printed.NK() == 8);
    CHECK_FALSE(printed.isLocallyMaximal());
    CHECK(printed.verifyMinpoly());
}

TEST_CASE("q=3, n=6, phi_T = t + tau^4")
{
    auto s = setup(3, 6, "T^2+T+2");
    auto P = profile(s, "t+tau^4");
    CHECK(P.mTilde() == bivariate(s.k->fq(), "x^6+(pi^2+1)*x^3+(pi^4-pi^2+2)", "pi"));
    CHECK(P.NK() == 6);
    CHECK(P.H() == 2);
    CHECK_FALSE(P.isLocallyMaximal());
    SkewPoly phiP = P.module().evalA(P.module().charPrime());
    CHECK(phiP == SkewPoly::parse(*s.k, "(2*t+1)*tau^4+tau^8", s.t));
}

TEST_CASE("q=3, n=4, phi_T = t + tau^2")
{
    auto s = setup(3, 4, "T^2+T+2");
    auto P = profile(s, "t+tau^2");
    CHECK(P.H() == 1);
    CHECK(P.mTilde() == bivariate(s.k->fq(), "x^4-x^3+(pi+2)*x^2+(pi+1)*x+pi^2+1", "pi"));
    CHECK(P.isLocallyMaximal());
    CHECK(P.invariantSolutions() == std::vector<InvariantTuple>{{2, 1, 1, 2}});
}

TEST_CASE("q=3, n=6, phi_T = t + tau + (2t+1) tau^2")
{
    auto s = setup(3, 6, "T^2+T+2");
    auto P = profile(s, "t+tau+(2*t+1)*tau^2");
    CHECK(P.mTilde() == bivariate(s.k->fq(), "x^6+x^3+pi^2+2", "pi"));
    CHECK_FALSE(P.isLocallyMaximal());
    CHECK(P.invariantSolutions() == std::vector<InvariantTuple>{{3, 2, 1, 2}});
}

TEST_CASE("q=3, n=4, rank 3 example recomputed")
{
    auto s = setup(3, 4, "T^2+T+2");
    auto P = profile(s, "t+(t+1)*tau+(t+2)*tau^2+tau^3");
    CHECK(P.s() * P.n() == P.NK() * P.r());
    CHECK(P.verifyMinpoly());
    CHECK(P.verifyReduction());
}

TEST_CASE("non-kernel example: m(x)")
{
    TowerSpec spec;
    spec.p = 2;
    spec.g = {{1}, {1}, {0}, {0}, {1}};
    auto k = FieldTower::make(spec);
    auto P = FrobeniusProfile(DrinfeldModule(k, SkewPoly::parse(*k, "t+t^3*tau^2+tau^3", k->generator())));
    CHECK(P.mText() == "x^3+T*x^2+x+T^4+T+1");
    CHECK(P.module().charPrime().toString() == "T^4+T+1");
    auto pi = P.frobeniusField()->pi();
    CHECK(P.frobeniusField()->norm(pi).num().monic().toString() == "T^4+T+1");
}

TEST_CASE("ramification solver")
{
    CHECK(solveRamificationInvariants(4, 2, 1, 4) == std::vector<InvariantTuple>{{2, 1, 1, 2}});
    CHECK(solveRamificationInvariants(6, 2, 2, 6) == std::vector<InvariantTuple>{{3, 2, 1, 2}});
    for (int d : {1, 3, 5})
        CHECK(solveRamificationInvariants(2 * d, d, 2, 2 * d) ==
              std::vector<InvariantTuple>{{1, 1, 2, 2 * d}, {2, 2, 1, d}});
    CHECK(solveRamificationInvariants(4, 2, 3, 2).empty());
}
