#include "drinfeld/io.hpp"

#include <fstream>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

std::uint32_t asUint(Json const & j, char const * what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw InputError(std::string(what) + " must be a non-negative integer");
    return j.get<std::uint32_t>();
}

std::string vecText(FrobeniusField const & f, FVec const & x) { return f.toString(x, "pi", "T"); }

Json vecJson(FVec const & x)
{
    Json a = Json::array();
    for (auto const & c : x)
        a.push_back(c.toString());
    return a;
}

Json polyVecJson(std::vector<APoly> const & v)
{
    Json a = Json::array();
    for (auto const & c : v)
        a.push_back(c.toString());
    return a;
}

} // namespace

Json parseJson(std::string const & text)
{
    try {
        return Json::parse(text);
    } catch (Json::exception const & e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Json readJsonFile(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseJson(ss.str());
}

TowerSpec towerSpecFromJson(Json const & j)
{
    if (!j.is_object())
        throw InputError("field spec must be an object");
    TowerSpec spec;
    spec.p = asUint(j.value("p", Json(2)), "p");
    std::uint32_t const e = j.contains("e") ? asUint(j["e"], "e") : (j.contains("h") ? 0 : 1);
    if (j.contains("h")) {
        spec.h.clear();
        for (auto const & c : j["h"])
            spec.h.push_back(asUint(c, "h coefficient"));
        if (e && spec.h.size() != e + 1)
            throw InputError("len(h) must be e+1");
    } else if (e > 1) {
        FqField const Fp(spec.p, {0, 1});
        spec.h.clear();
        for (auto c : firstIrreducible(Fp, e))
            spec.h.push_back(c.v);
    }
    FqField const F(spec.p, spec.h);
    if (j.contains("g")) {
        for (auto const & c : j["g"]) {
            if (c.is_array()) {
                std::vector<std::uint32_t> v;
                for (auto const & x : c)
                    v.push_back(asUint(x, "g coordinate"));
                spec.g.push_back(v);
            } else {
                std::uint32_t const code = asUint(c, "g coefficient");
                if (code >= F.q())
                    throw InputError("g coefficient out of range");
                spec.g.push_back(F.coords(FqElem{code}));
            }
        }
        if (j.contains("n") && spec.g.size() != asUint(j["n"], "n") + 1)
            throw InputError("len(g) must be n+1");
    } else {
        if (!j.contains("n"))
            throw InputError("field spec needs n or g");
        for (auto c : firstIrreducible(F, asUint(j["n"], "n")))
            spec.g.push_back(F.coords(c));
    }
    if (spec.g.size() < 2)
        throw InputError("n must be positive");
    return spec;
}

Json towerSpecToJson(TowerSpec const & spec)
{
    FqField const F(spec.p, spec.h);
    Json g = Json::array();
    for (auto const & c : spec.g)
        g.push_back(F.fromCoords(c).v);
    return {{"p", spec.p}, {"e", spec.e()}, {"h", spec.h}, {"n", spec.n()}, {"g", g}};
}

KElem kelemFromJson(FieldTower const & k, Json const & j)
{
    if (j.is_number_integer()) {
        std::uint32_t const v = asUint(j, "field element");
        if (v >= k.size())
            throw InputError("field element code out of range");
        return KElem{v};
    }
    if (!j.is_array() || j.size() > k.n())
        throw InputError("field element must be an integer code or at most n F_q codes");
    std::vector<FqElem> d(k.n(), FqElem{0});
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::uint32_t const v = asUint(j[i], "F_q code");
        if (v >= k.q())
            throw InputError("F_q code out of range");
        d[i] = FqElem{v};
    }
    return k.fromDigits(d);
}

Json kelemToJson(FieldTower const & k, KElem a)
{
    Json out = Json::array();
    for (auto d : k.digits(a))
        out.push_back(d.v);
    return out;
}

DrinfeldModule moduleFromJson(Json const & j)
{
    if (!j.is_object() || !j.contains("field") || !j.contains("phi_T"))
        throw InputError("module spec needs \"field\" and \"phi_T\"");
    auto k = FieldTower::make(towerSpecFromJson(j["field"]));
    Json const & c = j["phi_T"];
    if (!c.is_array())
        throw InputError("phi_T must be a list of coefficients");
    std::vector<KElem> coeffs;
    for (auto const & x : c)
        coeffs.push_back(kelemFromJson(*k, x));
    SkewPoly phiT(*k, coeffs);
    if (phiT.degree() < 1)
        throw InputError("phi_T must have positive tau-degree");
    return DrinfeldModule(k, phiT);
}

Json moduleToJson(DrinfeldModule const & phi)
{
    Json c = Json::array();
    for (auto x : phi.phiT().coeffs())
        c.push_back(kelemToJson(phi.tower(), x));
    return {{"field", towerSpecToJson(phi.tower().spec())}, {"phi_T", c}, {"phi_T_text", phi.toString()}};
}

APoly apolyFromJson(FqField const & F, Json const & j)
{
    if (j.is_string())
        return APoly::parse(F, j.get<std::string>());
    if (j.is_number_integer())
        return APoly::constant(F, F.fromInt(j.get<long long>()));
    if (!j.is_array())
        throw InputError("A-element must be a string or a list of F_q codes");
    std::vector<FqElem> c;
    for (auto const & x : j) {
        std::uint32_t const v = asUint(x, "F_q code");
        if (v >= F.q())
            throw InputError("F_q code out of range");
        c.push_back(FqElem{v});
    }
    return APoly(F, c);
}

Json apolyToJson(APoly const & a) { return a.toString(); }

FracIdeal idealFromJson(EndRing const & E, Json const & j)
{
    Json const & g = j.is_object() ? j.value("generators", Json()) : j;
    if (!g.is_array() || g.empty())
        throw InputError("ideal needs a non-empty list of generators");
    FqField const & F = E.module().fq();
    std::vector<FVec> gens;
    for (auto const & v : g) {
        if (!v.is_array() || v.size() != E.rank())
            throw InputError("each generator needs " + std::to_string(E.rank()) + " coordinates");
        std::vector<APoly> a;
        for (auto const & x : v)
            a.push_back(apolyFromJson(F, x));
        gens.push_back(E.fromOmega(a));
    }
    try {
        return FracIdeal::generatedBy(E.order(), gens);
    } catch (EmptyIdeal const &) {
        throw InputError("ideal generated by zero");
    }
}

Json profileToJson(FrobeniusProfile const & P)
{
    Json sols = Json::array();
    for (auto const & t : P.invariantSolutions())
        sols.push_back(Json::array({t[0], t[1], t[2], t[3]}));
    auto const cor = P.closedFormChecks();
    return {{"module", moduleToJson(P.module())},
            {"m", P.mText()},
            {"m_tilde", P.mTildeText()},
            {"s", P.s()},
            {"NK", P.NK()},
            {"H", P.H()},
            {"d", P.d()},
            {"n", P.n()},
            {"r", P.r()},
            {"char_prime", P.module().charPrime().toString()},
            {"ordinary", P.isOrdinary()},
            {"commutative", P.isCommutative()},
            {"separable", P.isSeparable()},
            {"locally_maximal", P.isLocallyMaximal()},
            {"lhs", P.localMaximality().lhs},
            {"rhs", P.localMaximality().rhs},
            {"closed_form_consistent", cor.consistent},
            {"invariant_solutions", sols}};
}

Json gorensteinToJson(GorensteinReport const & g)
{
    return {{"gorenstein", g.gorenstein},
            {"defect", g.defect.toString()},
            {"trace_form", g.traceUsed},
            {"non_gorenstein_primes", polyVecJson(g.nonGorensteinPrimes)}};
}

Json endRingToJson(EndRing const & E)
{
    FrobeniusField const & f = *E.profile().frobeniusField();
    DrinfeldModule const & phi = E.module();
    Json basis = Json::array();
    for (std::size_t i = 0; i < E.rank(); ++i)
        basis.push_back({{"skew", phi.skewToString(E.basis()[i])},
                         {"tau_degree", E.degrees()[i]},
                         {"pi", vecText(f, E.basisCoords()[i])},
                         {"pi_coordinates", vecJson(E.basisCoords()[i])}});
    Json table = Json::array();
    for (auto const & row : E.multiplicationTable()) {
        Json r = Json::array();
        for (auto const & entry : row)
            r.push_back(polyVecJson(entry));
        table.push_back(r);
    }
    return {{"rank", E.rank()},
            {"basis", basis},
            {"index_over_A_pi", E.indexOverAPi().toString()},
            {"is_A_pi", E.isAPi()},
            {"multiplication_table", table},
            {"gorenstein", gorensteinToJson(gorensteinReport(*E.order()))}};
}

Json kernelToJson(EndRing const & E, KernelReport const & k)
{
    FrobeniusField const & f = *E.profile().frobeniusField();
    Json out = {{"kernel", k.kernel}};
    out["witness"] = k.witness ? Json(vecText(f, *k.witness)) : Json();
    out["witness_in_A"] = k.witnessInA ? Json(k.witnessInA->toString()) : Json();
    return out;
}

Json actionToJson(EndRing const & E, FracIdeal const & I)
{
    DrinfeldModule const & phi = E.module();
    IdealAction const a = act(E, I);
    KernelReport const k = isKernelIdeal(E, I);
    EndComparison const cmp = endOfActedModule(E, I);
    return {{"ideal", I.toString()},
            {"norm", idealNorm(I).toString()},
            {"u_I", phi.skewToString(a.isogeny)},
            {"psi_T", phi.skewToString(a.module.phiT())},
            {"psi", moduleToJson(a.module)},
            {"kernel", kernelToJson(E, k)},
            {"multiplicator_ring", cmp.multiplicator.toString()},
            {"end_of_psi", cmp.actedEnd.toString()},
            {"multiplicator_in_end", cmp.contained},
            {"multiplicator_equals_end", cmp.equal}};
}

Json censusHeaderJson(Census const & C, std::uint64_t seed)
{
    DrinfeldModule const probe(C.tower, SkewPoly(*C.tower, {C.t, C.tower->one()}));
    return {{"record", "header"},
            {"schema_version", kSchemaVersion},
            {"tower", towerSpecToJson(C.tower->spec())},
            {"r", C.r},
            {"t", kelemToJson(*C.tower, C.t)},
            {"t_text", probe.elementToString(C.t)},
            {"char_prime", probe.charPrime().toString()},
            {"modules", C.modules},
            {"isomorphism_classes", C.classes.size()},
            {"isogeny_classes", C.isogenyClasses.size()},
            {"seed", seed}};
}

Json censusRecordJson(Census const & C, IsoClassInfo const & info)
{
    FrobeniusProfile const & P = *info.profile;
    Json end;
    if (info.end) {
        end = {{"rank", info.end->rank()},
               {"index_over_A_pi", info.end->indexOverAPi().toString()},
               {"is_A_pi", info.end->isAPi()},
               {"gorenstein", gorensteinToJson(*info.gorenstein)}};
    }
    Json c = Json::array();
    for (auto x : info.canonical.coeffs())
        c.push_back(kelemToJson(*C.tower, x));
    return {{"record", "class"},
            {"isogeny_id", info.isogenyId},
            {"iso_id", info.isoId},
            {"phi_T", c},
            {"phi_T_text", P.module().toString()},
            {"class_size", info.size},
            {"m", P.mText()},
            {"s", P.s()},
            {"NK", P.NK()},
            {"H", P.H()},
            {"d", P.d()},
            {"n", P.n()},
            {"r", P.r()},
            {"ordinary", P.isOrdinary()},
            {"commutative", P.isCommutative()},
            {"locally_maximal", P.isLocallyMaximal()},
            {"end", end}};
}

Json aPiOccurrenceToJson(APiOccurrenceReport const & r)
{
    return {{"isogeny_id", r.isogenyId}, {"m", r.mText},           {"skipped", r.skipped},
            {"notice", r.notice},        {"H", r.H},               {"d", r.d},
            {"n", r.n},                  {"predicted", r.predicted}, {"occurs", r.occurs},
            {"violations", r.violations}};
}

Json bijectionToJson(BijectionReport const & r)
{
    return {{"isogeny_id", r.isogenyId},
            {"m", r.mText},
            {"skipped", r.skipped},
            {"notice", r.notice},
            {"ideals_examined", r.idealsExamined},
            {"ideal_classes", r.idealClasses},
            {"isomorphism_classes", r.isoClasses},
            {"saturated_at", r.saturatedAt},
            {"last_degree", r.lastDegree},
            {"unknowns", r.unknowns},
            {"hits", r.hits},
            {"violations", r.violations}};
}

Json corpusToJson(CorpusReport const & r)
{
    return {{"orders", r.ordersChecked},
            {"gorenstein_orders", r.gorensteinOrders},
            {"ideals", r.idealsChecked},
            {"kernel_ideals", r.kernelIdeals},
            {"end_equalities", r.equalities},
            {"rescalings", r.rescalings},
            {"kernel_pairs", r.kernelPairs},
            {"violations", r.violations}};
}

Census censusFromJson(Json const & j, int jobs)
{
    if (!j.is_object() || !j.contains("field"))
        throw InputError("census spec needs \"field\"");
    auto k = FieldTower::make(towerSpecFromJson(j["field"]));
    if (j.contains("r") && !j["r"].is_number_integer())
        throw InputError("census rank must be an integer");
    int const r = j.value("r", 2);
    if (r < 1)
        throw InputError("census rank must be positive");
    KElem t = k->zero();
    if (j.contains("t")) {
        t = kelemFromJson(*k, j["t"]);
    } else if (j.contains("char_prime")) {
        auto roots = rootsInK(*k, apolyFromJson(k->fq(), j["char_prime"]));
        if (roots.empty())
            throw InputError("char_prime has no root in k");
        t = roots.front();
    }
    return censusIsomorphismClasses(k, r, t, jobs);
}

Json censusValidationJson(Census const & C, BijectionOptions const & opt, int corpusNormDeg, std::uint64_t seed)
{
    Json a = Json::array(), b = Json::array();
    std::size_t violations = 0;
    for (auto const & cls : C.isogenyClasses) {
        auto const ar = checkAPiOccurrence(C, cls);
        violations += ar.violations.size();
        a.push_back(aPiOccurrenceToJson(ar));
        auto const br = checkIdealClassBijection(C, cls, opt);
        violations += br.violations.size();
        b.push_back(bijectionToJson(br));
    }
    auto const corpus = checkCorpusProperties(C, corpusNormDeg, seed);
    violations += corpus.violations.size();
    return {{"record", "validation"},
            {"a_pi_occurrence", a},
            {"ideal_class_bijection", b},
            {"corpus", corpusToJson(corpus)},
            {"violations", violations}};
}

} // namespace drinfeld
