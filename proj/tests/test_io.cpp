#include "doctest.h"
#include "drinfeld/errors.hpp"
#include "drinfeld/io.hpp"

using namespace drinfeld;

TEST_CASE("tower specs")
{
    TowerSpec const a = towerSpecFromJson(parseJson(R"({"p":2,"e":1,"h":[0,1],"n":4,"g":[1,1,0,0,1]})"));
    CHECK(a.n() == 4);
    CHECK(towerSpecToJson(a) == parseJson(R"({"p":2,"e":1,"h":[0,1],"n":4,"g":[1,1,0,0,1]})"));
    TowerSpec const b = towerSpecFromJson(parseJson(R"({"p":3,"n":2})"));
    CHECK(FieldTower::make(b)->size() == 9);
    TowerSpec const c = towerSpecFromJson(parseJson(R"({"p":2,"e":2,"n":2})"));
    auto k = FieldTower::make(c);
    CHECK(k->q() == 4);
    CHECK(k->size() == 16);
    CHECK_THROWS_AS(towerSpecFromJson(parseJson(R"({"p":2,"n":4,"g":[1,1,0,1]})")), InputError);
    CHECK_THROWS_AS(FieldTower::make(towerSpecFromJson(parseJson(R"({"p":2,"g":[1,0,1]})"))), InputError);
    CHECK_THROWS_AS(parseJson("{"), InputError);
    CHECK_THROWS_AS(towerSpecFromJson(parseJson(R"({"p":2})")), InputError);
}

TEST_CASE("module round trip")
{
    Json const j = parseJson(R"({"field":{"p":2,"n":4,"g":[1,1,0,0,1]},"phi_T":[[0,1],[],[0,0,0,1],[1]]})");
    DrinfeldModule const phi = moduleFromJson(j);
    CHECK(phi.toString() == "t+t^3*tau^2+tau^3");
    DrinfeldModule const back = moduleFromJson(moduleToJson(phi));
    CHECK(back.phiT() == phi.phiT());
    CHECK_THROWS_AS(moduleFromJson(parseJson(R"({"field":{"p":2,"n":1},"phi_T":[[1]]})")), InputError);
    CHECK_THROWS_AS(moduleFromJson(parseJson(R"({"field":{"p":2,"n":1},"phi_T":[[2]]})")), InputError);
    CHECK_THROWS_AS(moduleFromJson(parseJson(R"({"phi_T":[1,1]})")), InputError);
}

TEST_CASE("ideals from End coordinates")
{
    DrinfeldModule const phi =
        moduleFromJson(parseJson(R"({"field":{"p":2,"n":4,"g":[1,1,0,0,1]},"phi_T":[[0,1],[],[0,0,0,1],[1]]})"));
    auto E = EndRing::compute(phi);
    FracIdeal const I = idealFromJson(*E, parseJson(R"({"generators":[["1","1","0"],["0","0","1"]]})"));
    Json const out = actionToJson(*E, I);
    CHECK(out["u_I"] == "(t^3+t+1)+(t^3+t^2)*tau+(t+1)*tau^2+tau^3");
    CHECK(out["kernel"]["kernel"] == false);
    CHECK(out["kernel"]["witness_in_A"] == "T^2+1");
    CHECK(out["multiplicator_in_end"] == true);
    CHECK_THROWS_AS(idealFromJson(*E, parseJson(R"({"generators":[["1","1"]]})")), InputError);
    CHECK_THROWS_AS(idealFromJson(*E, parseJson(R"({"generators":[["0","0","0"]]})")), InputError);
    CHECK_THROWS_AS(idealFromJson(*E, parseJson(R"({"generators":[]})")), InputError);
}

TEST_CASE("analyze JSON fields")
{
    DrinfeldModule const phi =
        moduleFromJson(parseJson(R"({"field":{"p":2,"n":4,"g":[1,1,0,0,1]},"phi_T":[[0,1],[],[0,0,0,1],[1]]})"));
    Json const j = profileToJson(FrobeniusProfile(phi));
    for (char const * key : {"m", "m_tilde", "s", "NK", "H", "d", "n", "r", "ordinary", "locally_maximal",
                             "invariant_solutions"})
        CHECK_MESSAGE(j.contains(key), key);
    CHECK(j["m"] == "x^3+T*x^2+x+T^4+T+1");
}
