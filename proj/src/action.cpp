#include "drinfeld/action.hpp"

#include "drinfeld/errors.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

namespace {

void requireIntegral(EndRing const & E, FracIdeal const & I)
{
    if (!E.lattice().contains(I.lattice()))
        throw NotSublattice("ideal is not contained in the endomorphism ring");
}

} // namespace

SkewPoly idealIsogeny(EndRing const & E, FracIdeal const & I)
{
    requireIntegral(E, I);
    std::vector<SkewPoly> gens;
    for (auto const & x : I.basis())
        gens.push_back(E.toSkew(x));
    return rgcd(gens);
}

IdealAction act(EndRing const & E, FracIdeal const & I)
{
    DrinfeldModule const & phi = E.module();
    SkewPoly const u = idealIsogeny(E, I);
    auto const [quo, rem] = rdivmod(u * phi.phiT(), u);
    if (!rem.isZero())
        throw InternalError("u_I phi_T is not right divisible by u_I");
    if (quo.coeff(0) != phi.t())
        throw InternalError("acted module has a different characteristic map");
    return {u, DrinfeldModule(phi.towerPtr(), quo)};
}

FracIdeal annihilatorIdeal(EndRing const & E, FracIdeal const & I)
{
    requireIntegral(E, I);
    auto const & O = I.order();
    FrobeniusField const & f = O->field();
    FqField const & F = f.field();
    FieldTower const & k = E.module().tower();
    std::size_t const n = k.n();
    std::size_t const s = O->dim();
    SkewPoly const u = idealIsogeny(E, I);
    if (u.degree() == 0)
        return FracIdeal::unit(O);
    APoly const chi = I.intersectionWithA().num();
    int const dc = chi.degree();
    auto const ob = O->basis();
    SkewPoly const phiT = E.module().phiT();

    // remainders of T^j o_i modulo u, as F_q digit columns
    std::vector<std::pair<std::size_t, int>> unknowns;
    std::vector<std::vector<FqElem>> cols;
    std::size_t const rows = static_cast<std::size_t>(u.degree()) * n;
    for (std::size_t i = 0; i < s; ++i) {
        SkewPoly x = E.toSkew(ob[i]);
        for (int j = 0; j < dc; ++j) {
            SkewPoly const r = rdivmod(x, u).rem;
            std::vector<FqElem> v(rows, FqElem{0});
            for (std::size_t d = 0; d < r.coeffs().size(); ++d) {
                auto const dg = k.digits(r.coeffs()[d]);
                for (std::size_t l = 0; l < n; ++l)
                    v[d * n + l] = dg[l];
            }
            cols.push_back(std::move(v));
            unknowns.push_back({i, j});
            x = phiT * x;
        }
    }
    FqMatrix M(F, std::max<std::size_t>(rows, 1), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r)
            M(r, c) = cols[c][r];
    std::vector<FVec> gens;
    for (auto const & b : ob)
        gens.push_back(RatFunc(chi) * b);
    for (auto const & v : M.nullspace()) {
        FVec x = zeroVec(F, s);
        for (std::size_t c = 0; c < unknowns.size(); ++c)
            if (v[c].v != 0)
                x = x + RatFunc(APoly::monomial(F, v[c], unknowns[c].second)) * ob[unknowns[c].first];
        gens.push_back(std::move(x));
    }
    return FracIdeal(O, ALattice::fromGenerators(F, s, gens));
}

KernelReport isKernelIdeal(EndRing const & E, FracIdeal const & I)
{
    KernelReport rep;
    FracIdeal const J = annihilatorIdeal(E, I);
    if (!J.lattice().contains(I.lattice()))
        throw InternalError("annihilator ideal does not contain I");
    if (idealEq(I, J)) {
        rep.kernel = true;
        return rep;
    }
    FrobeniusField const & f = I.order()->field();
    APoly const a = J.intersectionWithA().num();
    if (a != I.intersectionWithA().num()) {
        rep.witnessInA = a;
        rep.witness = f.fromA(a);
        return rep;
    }
    for (auto const & c : J.basis())
        if (!I.contains(c)) {
            rep.witness = c;
            return rep;
        }
    throw InternalError("distinct ideals without a separating column");
}

EndComparison endOfActedModule(EndRing const & E, FracIdeal const & I)
{
    IdealAction const a = act(E, I);
    auto const Epsi = EndRing::compute(a.module);
    if (Epsi->profile().m() != E.profile().m())
        throw InternalError("isogenous module has a different Frobenius minimal polynomial");
    ALattice const OI = multiplicatorRing(I)->lattice();
    ALattice const Ep = Epsi->lattice();
    return {OI, Ep, Ep.contains(OI), Ep == OI};
}

} // namespace drinfeld
