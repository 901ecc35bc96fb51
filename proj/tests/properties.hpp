#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "drinfeld/lattice.hpp"
#include "drinfeld/profile.hpp"

namespace drinfeld::props {

struct Outcome {
    int cases = 0;
    int failures = 0;
    std::string first;

    void fail(std::string what)
    {
        if (failures++ == 0)
            first = std::move(what);
    }
    bool ok() const { return failures == 0; }
};

inline SkewPoly randomSkew(FieldTower const & k, std::mt19937_64 & rng, int deg, bool monic = false)
{
    std::uniform_int_distribution<std::uint32_t> pick(0, k.size() - 1);
    std::vector<KElem> c(deg + 1);
    for (auto & x : c)
        x = KElem{pick(rng)};
    if (monic || c.back().v == 0)
        c.back() = k.one();
    return SkewPoly(k, c);
}

inline APoly randomA(FqField const & F, std::mt19937_64 & rng, int deg)
{
    std::uniform_int_distribution<std::uint32_t> pick(0, F.q() - 1);
    std::vector<FqElem> c(deg + 1);
    for (auto & x : c)
        x = FqElem{pick(rng)};
    return APoly(F, c);
}

inline std::shared_ptr<FieldTower const> randomTower(std::mt19937_64 & rng, int maxN)
{
    static std::uint32_t const primes[] = {2, 3, 5};
    std::uint32_t const p = primes[rng() % 3];
    std::uint32_t const n = 1 + static_cast<std::uint32_t>(rng() % (p == 5 ? 2 : maxN));
    return FieldTower::primeTower(p, n);
}

/// f = q g + r with deg r < deg g, and deg(a b) = deg a + deg b.
inline Outcome skewDivision(int cases, std::uint64_t seed)
{
    Outcome out;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i, ++out.cases) {
        auto k = randomTower(rng, 4);
        SkewPoly const f = randomSkew(*k, rng, static_cast<int>(rng() % 8));
        SkewPoly const g = randomSkew(*k, rng, static_cast<int>(rng() % 5));
        auto const qr = rdivmod(f, g);
        if (!(qr.quo * g + qr.rem == f) || qr.rem.degree() >= g.degree())
            out.fail("rdivmod identity for f = " + f.toString() + ", g = " + g.toString());
        if ((f * g).degree() != f.degree() + g.degree())
            out.fail("degree additivity for " + f.toString() + " * " + g.toString());
        // quotient of a constructed product
        SkewPoly const h = randomSkew(*k, rng, 3);
        auto const qr2 = rdivmod(h * g, g);
        if (!qr2.rem.isZero() || !(qr2.quo == h))
            out.fail("exact division of h*g by g");
    }
    return out;
}

/// rgcd divides every input, every common right factor divides it, and the
/// Bezout cofactors recombine to it.
inline Outcome skewGcd(int cases, std::uint64_t seed)
{
    Outcome out;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i, ++out.cases) {
        auto k = randomTower(rng, 3);
        SkewPoly const h = randomSkew(*k, rng, static_cast<int>(rng() % 3), true);
        std::vector<SkewPoly> fs;
        int const count = 2 + static_cast<int>(rng() % 2);
        for (int j = 0; j < count; ++j)
            fs.push_back(randomSkew(*k, rng, static_cast<int>(rng() % 4)) * h);
        SkewBezout const bz = rgcdBezout(fs);
        SkewPoly comb(*k);
        for (int j = 0; j < count; ++j) {
            comb += bz.cofactors[j] * fs[j];
            if (!rdivides(bz.gcd, fs[j], nullptr))
                out.fail("rgcd does not divide an input");
        }
        if (!(comb == bz.gcd))
            out.fail("Bezout certificate does not recombine");
        if (!rdivides(h, bz.gcd, nullptr))
            out.fail("common right factor does not divide the rgcd");
        if (!bz.gcd.isMonic())
            out.fail("rgcd is not monic");
        if (!(rgcd(fs) == bz.gcd))
            out.fail("rgcd and rgcdBezout disagree");
    }
    return out;
}

/// m(pi) = 0, m~ mod pi = unit * p^{NK/d}, and lhs <= rhs.
struct ProfileOutcome {
    Outcome minpoly, reduction, inequality;
};

inline ProfileOutcome profiles(int cases, std::uint64_t seed)
{
    ProfileOutcome out;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        auto k = randomTower(rng, 6);
        int const r = 1 + static_cast<int>(rng() % 3);
        SkewPoly phiT = randomSkew(*k, rng, r);
        if (rng() % 4 == 0) // sparse phi_T, where heights above 1 are common
            phiT = SkewPoly::constant(*k, phiT.coeff(0)) + SkewPoly::monomial(*k, phiT.lead(), r);
        FrobeniusProfile const P(DrinfeldModule(k, phiT));
        std::string const where = phiT.toString() + " over F_" + std::to_string(k->size());

        ++out.minpoly.cases;
        SkewPoly acc(*k);
        SkewPoly const pi = SkewPoly::tau(*k, k->n());
        for (std::size_t j = P.m().size(); j-- > 0;)
            acc = acc * pi + P.module().evalA(P.m()[j]);
        if (!acc.isZero())
            out.minpoly.fail("m(pi) != 0 for " + where);

        ++out.reduction.cases;
        FqField const & F = k->fq();
        std::vector<FqElem> bar;
        for (auto const & c : P.mTilde())
            bar.push_back(c.coeff(0));
        APoly const mbar(F, bar);
        if (P.NK() % P.d() != 0 ||
            !(mbar.monic() == P.module().charPrime().pow(static_cast<unsigned>(P.NK() / P.d()))))
            out.reduction.fail("m~ mod pi is not a unit times p^(NK/d) for " + where);

        ++out.inequality.cases;
        if (P.localMaximality().lhs > P.localMaximality().rhs)
            out.inequality.fail("lhs > rhs for " + where);
    }
    return out;
}

/// HNF is independent of the generating set, and chi is multiplicative
/// along chains N ⊆ M ⊆ L.
inline Outcome hermite(int cases, std::uint64_t seed)
{
    Outcome out;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i, ++out.cases) {
        auto k = FieldTower::primeTower(rng() % 2 ? 2 : 3, 1);
        FqField const & F = k->fq();
        std::size_t const s = 1 + rng() % 3;
        auto randomVec = [&](int deg) {
            FVec v;
            for (std::size_t j = 0; j < s; ++j)
                v.push_back(RatFunc(randomA(F, rng, deg)));
            return v;
        };
        std::vector<FVec> gens;
        while (true) {
            gens.clear();
            for (std::size_t j = 0; j < s + rng() % 2; ++j)
                gens.push_back(randomVec(2));
            std::vector<FVec> cols = gens;
            RatMatrix M(F, s, cols.size());
            for (std::size_t a = 0; a < s; ++a)
                for (std::size_t b = 0; b < cols.size(); ++b)
                    M(a, b) = cols[b][a];
            if (M.rank() == s)
                break;
        }
        ALattice const L = ALattice::fromGenerators(F, s, gens);

        // shuffled generators plus random A-combinations of them
        std::vector<FVec> other = gens;
        std::shuffle(other.begin(), other.end(), rng);
        for (int extra = 0; extra < 2; ++extra) {
            FVec c = zeroVec(F, s);
            for (auto const & g : gens)
                c = c + RatFunc(randomA(F, rng, 1)) * g;
            other.push_back(c);
        }
        if (!(ALattice::fromGenerators(F, s, other) == L))
            out.fail("HNF depends on the generating set");

        // unimodular change of basis: add multiples of one column to another
        std::vector<FVec> basis = L.columns();
        if (s > 1) {
            std::size_t const a = rng() % s, b = (a + 1) % s;
            basis[a] = basis[a] + RatFunc(randomA(F, rng, 2)) * basis[b];
        }
        if (!(ALattice::fromGenerators(F, s, basis) == L))
            out.fail("HNF changes under a unimodular transformation");

        // chain L ⊇ M ⊇ N by integral transforms with known determinant
        auto sub = [&](ALattice const & X, APoly & detOut) {
            auto cols = X.columns();
            std::vector<FVec> image;
            detOut = APoly::constant(F, 1);
            for (std::size_t j = 0; j < s; ++j) {
                APoly d = randomA(F, rng, 1);
                if (d.isZero())
                    d = APoly::constant(F, 1);
                detOut *= d;
                FVec v = RatFunc(d) * cols[j];
                for (std::size_t l = j + 1; l < s; ++l)
                    v = v + RatFunc(randomA(F, rng, 1)) * cols[l];
                image.push_back(v);
            }
            detOut = detOut.monic();
            return ALattice::fromGenerators(F, s, image);
        };
        APoly d1, d2;
        ALattice const M = sub(L, d1);
        ALattice const N = sub(M, d2);
        APoly const iLM = latticeIndex(L, M), iMN = latticeIndex(M, N), iLN = latticeIndex(L, N);
        if (!(iLM == d1) || !(iMN == d2))
            out.fail("index differs from the determinant of the transform");
        if (!(iLM * iMN == iLN))
            out.fail("index is not multiplicative");
    }
    return out;
}

} // namespace drinfeld::props
