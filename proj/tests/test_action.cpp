#include "doctest.h"
#include "drinfeld/action.hpp"
#include "drinfeld/errors.hpp"

using namespace drinfeld;

namespace {

struct Rank3F16 {
    std::shared_ptr<FieldTower const> k = FieldTower::make({2, {0, 1}, {{1}, {1}, {0}, {0}, {1}}});
    std::shared_ptr<FrobeniusProfile const> P =
        std::make_shared<FrobeniusProfile const>(DrinfeldModule(k, sk("t+t^3*tau^2+tau^3")));
    std::shared_ptr<EndRing const> E = EndRing::compute(P);

    SkewPoly sk(char const * s) const { return SkewPoly::parse(*k, s, k->generator()); }
    APoly A(char const * s) const { return APoly::parse(k->fq(), s); }
};

} // namespace

TEST_CASE("the ideal (e2, e3) over F_16 is not a kernel ideal")
{
    Rank3F16 ex;
    auto const & f = *ex.P->frobeniusField();
    DrinfeldModule const & phi = ex.P->module();
    auto x2 = *ex.E->fromSkew(ex.sk("1+tau^4"));
    auto x3 = *ex.E->fromSkew(ex.sk("t^3+t^2+t+(t^3+t^2+1)*tau^2+(t^3+t)*tau^3+(t^3+t^2)*tau^4+tau^5"));
    FracIdeal const I = FracIdeal::generatedBy(ex.E->order(), {x2, x3});
    SkewPoly const w = ex.sk("(t^3+t+1)+(t^3+t^2)*tau+(t+1)*tau^2+tau^3");
    CHECK(idealIsogeny(*ex.E, I) == w);
    auto const [q, r] = rdivmod(phi.evalA(ex.A("(T+1)^2")), w);
    CHECK(r.isZero());
    CHECK(q == ex.sk("t+(t^2+1)*tau+(t^2+t)*tau^2+tau^3"));

    auto rep = isKernelIdeal(*ex.E, I);
    CHECK(!rep.kernel);
    REQUIRE(rep.witnessInA);
    CHECK(*rep.witnessInA == ex.A("(T+1)^2"));
    CHECK(I.intersectionWithA().num() == ex.A("(T+1)^3"));

    auto a = act(*ex.E, I);
    CHECK(a.isogeny * phi.phiT() == a.module.phiT() * a.isogeny);
    CHECK(a.module.phiT().coeff(0) == phi.t());
    auto cmp = endOfActedModule(*ex.E, I);
    CHECK(cmp.contained);
    (void)f;
}

TEST_CASE("kernel ideals and endomorphism rings of acted modules")
{
    Rank3F16 ex;
    auto ideals = enumerateIntegralIdeals(ex.E->order(), 3);
    int kernel = 0, total = 0;
    for (auto const & I : ideals) {
        ++total;
        auto rep = isKernelIdeal(*ex.E, I);
        kernel += rep.kernel;
        auto cmp = endOfActedModule(*ex.E, I);
        CHECK(cmp.contained);
        if (rep.kernel)
            CHECK(cmp.equal);
    }
    CHECK(kernel < total);
}

TEST_CASE("principal ideals act trivially up to isomorphism")
{
    Rank3F16 ex;
    auto const & f = *ex.P->frobeniusField();
    auto x3 = *ex.E->fromSkew(ex.sk("t^3+t^2+t+(t^3+t^2+1)*tau^2+(t^3+t)*tau^3+(t^3+t^2)*tau^4+tau^5"));
    for (auto const & I : enumerateIntegralIdeals(ex.E->order(), 2)) {
        auto a = act(*ex.E, I);
        auto b = act(*ex.E, I.scaled(x3 + f.one()));
        CHECK(a.module.isIsomorphic(b.module));
    }
}
