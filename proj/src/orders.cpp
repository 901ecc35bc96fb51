#include "drinfeld/orders.hpp"

#include <algorithm>
#include <functional>

#include "drinfeld/errors.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

namespace {

FVec toFVec(FqField const & F, std::vector<APoly> const & a)
{
    FVec v;
    for (auto const & x : a)
        v.push_back(x.isZero() ? RatFunc::zero(F) : RatFunc(x));
    return v;
}

std::optional<std::vector<APoly>> polynomialEntries(FVec const & v)
{
    std::vector<APoly> r;
    for (auto const & x : v) {
        if (!x.isPolynomial())
            return std::nullopt;
        r.push_back(x.num());
    }
    return r;
}

// Incremental row echelon basis of F_q^len.
class EchelonBasis {
  public:
    EchelonBasis(FqField const & F, std::size_t len) : F_(F), len_(len) {}

    bool insert(std::vector<FqElem> v)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            FqElem const c = v[pivots_[r]];
            if (c.v == 0)
                continue;
            for (std::size_t j = 0; j < len_; ++j)
                v[j] = F_.sub(v[j], F_.mul(c, rows_[r][j]));
        }
        std::size_t p = 0;
        while (p < len_ && v[p].v == 0)
            ++p;
        if (p == len_)
            return false;
        FqElem const inv = F_.inv(v[p]);
        for (auto & x : v)
            x = F_.mul(x, inv);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            FqElem const c = rows_[r][p];
            if (c.v == 0)
                continue;
            for (std::size_t j = 0; j < len_; ++j)
                rows_[r][j] = F_.sub(rows_[r][j], F_.mul(c, v[j]));
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    std::size_t size() const { return rows_.size(); }

  private:
    FqField const & F_;
    std::size_t len_;
    std::vector<std::vector<FqElem>> rows_;
    std::vector<std::size_t> pivots_;
};

std::vector<FqElem> skewDigits(FieldTower const & k, SkewPoly const & f, std::size_t maxDeg)
{
    std::size_t const n = k.n();
    std::vector<FqElem> v((maxDeg + 1) * n, FqElem{0});
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > maxDeg)
            throw InternalError("skew polynomial exceeds the coordinate window");
        auto const d = k.digits(f.coeffs()[i]);
        for (std::size_t j = 0; j < n; ++j)
            v[i * n + j] = d[j];
    }
    return v;
}

SkewPoly skewFromDigits(FieldTower const & k, std::vector<FqElem> const & v)
{
    std::size_t const n = k.n();
    std::vector<KElem> c(v.size() / n);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = k.fromDigits(std::vector<FqElem>(v.begin() + i * n, v.begin() + (i + 1) * n));
    return SkewPoly(k, c);
}

KElem unitDigit(FieldTower const & k, std::size_t j)
{
    std::vector<FqElem> d(k.n(), FqElem{0});
    d[j] = k.fq().one();
    return k.fromDigits(d);
}

// pi-power coordinates of an endomorphism w: solve phi_c w = sum phi_{b_i} pi^i.
FVec piCoordinates(FrobeniusProfile const & P, SkewPoly const & w)
{
    DrinfeldModule const & phi = P.module();
    FieldTower const & k = phi.tower();
    FqField const & F = phi.fq();
    int const r = phi.rank(), n = phi.n(), s = P.s();
    int const dw = w.degree();
    std::vector<SkewPoly> phiPow{SkewPoly::one(k)};
    for (int K = 0; K <= 48; ++K) {
        int const Dc = K;
        int const Db = 2 * K + (dw + r - 1) / r + (s * n + r - 1) / r;
        while (static_cast<int>(phiPow.size()) <= std::max(Dc, Db))
            phiPow.push_back(phiPow.back() * phi.phiT());
        std::size_t const maxDeg = static_cast<std::size_t>(std::max(r * Dc + dw, r * Db + n * (s - 1)));
        std::vector<std::vector<FqElem>> cols;
        for (int j = 0; j <= Dc; ++j)
            cols.push_back(skewDigits(k, phiPow[j] * w, maxDeg));
        for (int i = 0; i < s; ++i) {
            SkewPoly const pii = SkewPoly::tau(k, static_cast<std::size_t>(n * i));
            for (int j = 0; j <= Db; ++j) {
                auto v = skewDigits(k, -(phiPow[j] * pii), maxDeg);
                cols.push_back(std::move(v));
            }
        }
        FqMatrix M(F, (maxDeg + 1) * n, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t i = 0; i < cols[c].size(); ++i)
                M(i, c) = cols[c][i];
        auto null = M.nullspace();
        if (null.empty())
            continue;
        auto const & sol = null.front();
        std::vector<FqElem> cc(sol.begin(), sol.begin() + Dc + 1);
        APoly const c(F, cc);
        if (c.isZero())
            throw InternalError("degenerate relation for pi-coordinates");
        FVec out;
        std::size_t pos = Dc + 1;
        for (int i = 0; i < s; ++i) {
            std::vector<FqElem> bc(sol.begin() + pos, sol.begin() + pos + Db + 1);
            pos += Db + 1;
            out.push_back(RatFunc(APoly(F, bc), c));
        }
        return out;
    }
    throw InternalError("pi-coordinates of an endomorphism not found within the degree cap");
}

} // namespace

Order::Order(std::shared_ptr<FrobeniusField const> f, ALattice L) : f_(std::move(f)), L_(std::move(L))
{
    if (L_.dim() != f_->degree())
        throw ContextError("order lattice has the wrong dimension");
    if (!L_.contains(f_->one()))
        throw InputError("an order must contain 1");
    auto const cols = L_.columns();
    table_.assign(cols.size(), std::vector<std::vector<APoly>>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i; j < cols.size(); ++j) {
            auto c = L_.coordinates(f_->mul(cols[i], cols[j]));
            if (!c)
                throw InputError("lattice is not closed under multiplication");
            table_[i][j] = *c;
            table_[j][i] = *c;
        }
}

std::shared_ptr<Order const> orderAPi(FrobeniusProfile const & P)
{
    return std::make_shared<Order const>(P.frobeniusField(), ALattice::identity(P.fq(), P.s()));
}

std::shared_ptr<EndRing const> EndRing::compute(DrinfeldModule const & phi)
{
    return compute(std::make_shared<FrobeniusProfile const>(phi));
}

std::shared_ptr<EndRing const> EndRing::compute(std::shared_ptr<FrobeniusProfile const> P)
{
    if (!P->isCommutative())
        throw NonCommutativeEndomorphismRing("[F~:F] = " + std::to_string(P->s()) + " is smaller than the rank " +
                                             std::to_string(P->r()));
    DrinfeldModule const & phi = P->module();
    FieldTower const & k = phi.tower();
    FqField const & F = phi.fq();
    std::size_t const n = k.n();
    int const r = phi.rank();
    int const s = P->s();
    int const cap = static_cast<int>(n) * s + r;

    std::shared_ptr<EndRing> E(new EndRing());
    E->P_ = P;
    E->omega_.push_back(SkewPoly::one(k));
    E->delta_.push_back(0);

    std::vector<SkewPoly> phiPow{SkewPoly::one(k)};
    EchelonBasis span(F, (cap + 1) * n);
    span.insert(skewDigits(k, SkewPoly::one(k), cap));
    // commutator columns for the unknown e_j tau^i
    std::vector<SkewPoly> comm;
    for (int N = 0; N <= cap && static_cast<int>(E->omega_.size()) < s; ++N) {
        for (std::size_t j = 0; j < n; ++j) {
            SkewPoly const u = SkewPoly::monomial(k, unitDigit(k, j), N);
            comm.push_back(u * phi.phiT() - phi.phiT() * u);
        }
        for (std::size_t i = 0; i < E->omega_.size(); ++i) {
            int const rest = N - E->delta_[i];
            if (rest <= 0 || rest % r != 0)
                continue;
            int const j = rest / r;
            while (static_cast<int>(phiPow.size()) <= j)
                phiPow.push_back(phiPow.back() * phi.phiT());
            span.insert(skewDigits(k, phiPow[j] * E->omega_[i], cap));
        }
        FqMatrix M(F, (N + r + 1) * n, (N + 1) * n);
        for (std::size_t c = 0; c < comm.size(); ++c) {
            auto const d = skewDigits(k, comm[c], N + r);
            for (std::size_t i = 0; i < d.size(); ++i)
                M(i, c) = d[i];
        }
        auto null = M.nullspace();
        if (null.size() <= span.size())
            continue;
        for (auto & v : null) {
            std::vector<FqElem> padded(v);
            padded.resize((cap + 1) * n, FqElem{0});
            if (!span.insert(padded))
                continue;
            SkewPoly w = skewFromDigits(k, v);
            if (w.degree() != N)
                throw InternalError("endomorphism basis search lost track of degrees");
            E->omega_.push_back(w.monic() == w ? w : w);
            E->delta_.push_back(N);
        }
        if (static_cast<int>(E->omega_.size()) > s)
            throw NonCommutativeEndomorphismRing("centralizer has A-rank larger than [F~:F]");
    }
    if (static_cast<int>(E->omega_.size()) != s)
        throw InternalError("endomorphism basis incomplete at the degree cap " + std::to_string(cap));

    E->coords_.push_back(P->frobeniusField()->one());
    for (std::size_t i = 1; i < E->omega_.size(); ++i)
        E->coords_.push_back(piCoordinates(*P, E->omega_[i]));
    ALattice L = ALattice::fromGenerators(F, s, E->coords_);
    if (!L.contains(ALattice::identity(F, s)))
        throw InternalError("computed endomorphism ring does not contain A[pi]");
    E->order_ = std::make_shared<Order const>(P->frobeniusField(), L);
    E->omegaInv_ = RatMatrix::fromColumns(F, E->coords_).inverse();
    E->table_.assign(s, std::vector<std::vector<APoly>>(s));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            auto c = E->omegaCoordinates(P->frobeniusField()->mul(E->coords_[i], E->coords_[j]));
            if (!c)
                throw InternalError("endomorphism basis is not closed under multiplication");
            E->table_[i][j] = *c;
        }
    return E;
}

std::optional<std::vector<APoly>> EndRing::omegaCoordinates(FVec const & x) const
{
    return polynomialEntries(omegaInv_->apply(x));
}

FVec EndRing::fromOmega(std::vector<APoly> const & a) const
{
    FqField const & F = P_->fq();
    FVec x = zeroVec(F, rank());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].isZero())
            x = x + RatFunc(a[i]) * coords_[i];
    return x;
}

SkewPoly EndRing::skewFromOmega(std::vector<APoly> const & a) const
{
    SkewPoly u(module().tower());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].isZero())
            u += module().evalA(a[i]) * omega_[i];
    return u;
}

SkewPoly EndRing::toSkew(FVec const & x) const
{
    auto a = omegaCoordinates(x);
    if (!a)
        throw NotSublattice("element is not in the endomorphism ring");
    return skewFromOmega(*a);
}

std::optional<std::vector<APoly>> EndRing::omegaCoordinatesOfSkew(SkewPoly const & u0) const
{
    DrinfeldModule const & phi = module();
    FieldTower const & k = phi.tower();
    FqField const & F = phi.fq();
    int const r = phi.rank();
    std::size_t const s = rank();
    std::vector<APoly> a(s, APoly(F));
    std::vector<SkewPoly> phiPow{SkewPoly::one(k)};
    SkewPoly u = u0;
    while (!u.isZero()) {
        int const D = u.degree();
        std::vector<std::pair<std::size_t, int>> terms;
        std::vector<SkewPoly> elems;
        for (std::size_t i = 0; i < s; ++i) {
            int const rest = D - delta_[i];
            if (rest < 0 || rest % r != 0)
                continue;
            int const j = rest / r;
            while (static_cast<int>(phiPow.size()) <= j)
                phiPow.push_back(phiPow.back() * phi.phiT());
            terms.push_back({i, j});
            elems.push_back(phiPow[j] * omega_[i]);
        }
        if (terms.empty())
            return std::nullopt;
        FqMatrix M(F, k.n(), terms.size());
        for (std::size_t c = 0; c < terms.size(); ++c) {
            auto const d = k.digits(elems[c].lead());
            for (std::size_t i = 0; i < d.size(); ++i)
                M(i, c) = d[i];
        }
        auto sol = M.solve(k.digits(u.lead()));
        if (!sol)
            return std::nullopt;
        for (std::size_t c = 0; c < terms.size(); ++c) {
            FqElem const x = (*sol)[c];
            if (x.v == 0)
                continue;
            a[terms[c].first] += APoly::monomial(F, x, terms[c].second);
            u -= elems[c].scaledLeft(k.embed(x));
        }
        if (!u.isZero() && u.degree() >= D)
            throw InternalError("reduction against the endomorphism basis did not lower the degree");
    }
    return a;
}

std::optional<FVec> EndRing::fromSkew(SkewPoly const & u) const
{
    auto a = omegaCoordinatesOfSkew(u);
    if (!a)
        return std::nullopt;
    return fromOmega(*a);
}

int EndRing::tauDegree(std::vector<APoly> const & a) const
{
    int d = -1;
    int const r = module().rank();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].isZero())
            d = std::max(d, r * a[i].degree() + delta_[i]);
    return d;
}

bool EndRing::isAPi() const { return lattice() == ALattice::identity(P_->fq(), rank()); }

APoly EndRing::indexOverAPi() const { return latticeIndex(lattice(), ALattice::identity(P_->fq(), rank())); }

FracIdeal::FracIdeal(std::shared_ptr<Order const> order, ALattice L) : order_(std::move(order)), L_(std::move(L))
{
    FrobeniusField const & f = order_->field();
    auto const ob = order_->basis();
    auto const cols = L_.columns();
    for (auto const & b : ob) {
        if (b == f.one())
            continue;
        for (auto const & c : cols)
            if (!L_.contains(f.mul(b, c)))
                throw InputError("lattice is not an ideal of the order");
    }
}

FracIdeal FracIdeal::generatedBy(std::shared_ptr<Order const> order, std::vector<FVec> const & gens)
{
    FrobeniusField const & f = order->field();
    std::vector<FVec> all;
    auto const ob = order->basis();
    for (auto const & g : gens) {
        if (isZero(g))
            continue;
        for (auto const & b : ob)
            all.push_back(f.mul(g, b));
    }
    if (all.empty())
        throw EmptyIdeal("ideal generated by zero");
    ALattice L = ALattice::fromGenerators(f.field(), f.degree(), all);
    return FracIdeal(std::move(order), std::move(L));
}

FracIdeal FracIdeal::unit(std::shared_ptr<Order const> order)
{
    ALattice L = order->lattice();
    return FracIdeal(std::move(order), std::move(L));
}

FracIdeal FracIdeal::principal(std::shared_ptr<Order const> order, FVec const & x)
{
    return generatedBy(std::move(order), {x});
}

FracIdeal FracIdeal::scaled(FVec const & x) const
{
    if (isZero(x))
        throw EmptyIdeal("scaling an ideal by zero");
    FrobeniusField const & f = order_->field();
    std::vector<FVec> g;
    for (auto const & c : L_.columns())
        g.push_back(f.mul(c, x));
    return FracIdeal(order_, ALattice::fromGenerators(f.field(), f.degree(), g));
}

ALattice FracIdeal::orderCoordinates() const
{
    FqField const & F = order_->field().field();
    RatMatrix const inv = order_->lattice().basisMatrix().inverse();
    std::vector<FVec> g;
    for (auto const & c : L_.columns())
        g.push_back(inv.apply(c));
    return ALattice::fromGenerators(F, L_.dim(), g);
}

RatFunc FracIdeal::intersectionWithA() const { return RatFunc(L_.entry(0, 0), L_.den()); }

static void sameOrder(FracIdeal const & I, FracIdeal const & J)
{
    if (I.order() != J.order() && !(*I.order() == *J.order()))
        throw ContextError("ideals of different orders");
}

FracIdeal idealMul(FracIdeal const & I, FracIdeal const & J)
{
    sameOrder(I, J);
    FrobeniusField const & f = I.order()->field();
    std::vector<FVec> g;
    auto const a = I.basis(), b = J.basis();
    for (auto const & x : a)
        for (auto const & y : b)
            g.push_back(f.mul(x, y));
    return FracIdeal(I.order(), ALattice::fromGenerators(f.field(), f.degree(), g));
}

FracIdeal idealColon(FracIdeal const & I, FracIdeal const & J)
{
    sameOrder(I, J);
    FrobeniusField const & f = I.order()->field();
    std::optional<ALattice> acc;
    for (auto const & y : J.basis()) {
        FVec const yi = f.inv(y);
        std::vector<FVec> g;
        for (auto const & c : I.basis())
            g.push_back(f.mul(c, yi));
        ALattice L = ALattice::fromGenerators(f.field(), f.degree(), g);
        acc = acc ? latticeIntersect(*acc, L) : L;
    }
    return FracIdeal(I.order(), *acc);
}

FracIdeal idealSum(FracIdeal const & I, FracIdeal const & J)
{
    sameOrder(I, J);
    return FracIdeal(I.order(), latticeSum(I.lattice(), J.lattice()));
}

FracIdeal idealIntersect(FracIdeal const & I, FracIdeal const & J)
{
    sameOrder(I, J);
    return FracIdeal(I.order(), latticeIntersect(I.lattice(), J.lattice()));
}

RatFunc idealNorm(FracIdeal const & I)
{
    RatFunc const q = I.lattice().det() / I.order()->lattice().det();
    return RatFunc(q.num().monic(), q.den());
}

bool idealEq(FracIdeal const & I, FracIdeal const & J) { return I.lattice() == J.lattice(); }

std::shared_ptr<Order const> multiplicatorRing(FracIdeal const & I)
{
    return std::make_shared<Order const>(I.order()->frobeniusField(), idealColon(I, I).lattice());
}

bool weaklyEquivalent(FracIdeal const & I, FracIdeal const & J)
{
    FracIdeal const P = idealMul(idealColon(I, J), idealColon(J, I));
    return P.contains(I.order()->field().one());
}

LinEquivResult linEquiv(EndRing const & E, FracIdeal const & I, FracIdeal const & J, int bound)
{
    FrobeniusField const & f = I.order()->field();
    FqField const & F = f.field();
    if (idealEq(I, J))
        return {LinEquivStatus::Yes, f.one(), "equal ideals"};
    if (!weaklyEquivalent(I, J))
        return {LinEquivStatus::No, std::nullopt, "not weakly equivalent"};

    FracIdeal const C = idealColon(I, J);
    APoly const c = C.lattice().den();
    int const s = static_cast<int>(f.degree());
    int const r = E.module().rank();
    int const D = I.lattice().det().degree() - J.lattice().det().degree();
    int const Dp = D + s * c.degree();
    if (Dp < 0)
        return {LinEquivStatus::No, std::nullopt, "negative norm degree"};
    if (Dp > bound)
        return {LinEquivStatus::Unknown, std::nullopt, "norm degree " + std::to_string(Dp) + " exceeds the bound"};

    // cC inside E, in omega coordinates.
    std::vector<FVec> gens;
    for (auto const & col : C.basis()) {
        auto a = E.omegaCoordinates(RatFunc(c) * col);
        if (!a)
            throw InternalError("scaled colon ideal is not inside the endomorphism ring");
        gens.push_back(toFVec(F, *a));
    }
    ALattice const M = ALattice::fromGenerators(F, s, gens);
    if (!M.isIntegral())
        throw InternalError("scaled colon ideal is not integral");

    auto reduce = [&](std::vector<APoly> a) {
        for (int i = s; i-- > 0;) {
            APoly const q = a[i] / M.entry(i, i);
            if (q.isZero())
                continue;
            for (int row = 0; row <= i; ++row)
                a[row] -= q * M.entry(row, i);
        }
        return a;
    };
    std::vector<int> rowOffset(s + 1, 0);
    for (int i = 0; i < s; ++i)
        rowOffset[i + 1] = rowOffset[i] + M.entry(i, i).degree();

    std::vector<std::pair<int, int>> unknowns; // (i, j): T^j e_i
    auto const & delta = E.degrees();
    for (int i = 0; i < s; ++i)
        if (Dp >= delta[i])
            for (int j = 0; j <= (Dp - delta[i]) / r; ++j)
                unknowns.push_back({i, j});
    if (unknowns.empty())
        return {LinEquivStatus::No, std::nullopt, "no candidates of the required degree"};

    FqMatrix A(F, std::max(rowOffset[s], 1), unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        std::vector<APoly> a(s, APoly(F));
        a[unknowns[u].first] = APoly::monomial(F, F.one(), unknowns[u].second);
        auto const rem = reduce(std::move(a));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < M.entry(i, i).degree(); ++j)
                A(rowOffset[i] + j, u) = rem[i].coeff(j);
    }
    for (auto const & v : A.nullspace()) {
        bool top = false;
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            auto [i, j] = unknowns[u];
            if (v[u].v != 0 && r * j + delta[i] == Dp)
                top = true;
        }
        if (!top)
            continue;
        std::vector<APoly> a(s, APoly(F));
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            if (v[u].v != 0)
                a[unknowns[u].first] += APoly::monomial(F, v[u], unknowns[u].second);
        FVec const x = E.fromOmega(a);
        FVec const w = RatFunc(c).inv() * x;
        if (!idealEq(J.scaled(w), I))
            throw InternalError("linear equivalence witness failed verification");
        return {LinEquivStatus::Yes, w, "witness found"};
    }
    return {LinEquivStatus::No, std::nullopt, "no element of (I:J) has the required norm degree"};
}

LinEquivResult isPrincipal(EndRing const & E, FracIdeal const & I, int bound)
{
    return linEquiv(E, I, FracIdeal::unit(I.order()), bound);
}

ALattice dualLattice(Order const & O, DualForm form, bool * traceUsed)
{
    FrobeniusField const & f = O.field();
    FqField const & F = f.field();
    std::size_t const s = O.dim();
    auto const w = O.basis();
    auto gram = [&](bool trace) {
        RatMatrix G(F, s, s);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = i; j < s; ++j) {
                FVec const p = f.mul(w[i], w[j]);
                G(i, j) = G(j, i) = trace ? f.trace(p) : p[s - 1];
            }
        return G;
    };
    RatMatrix G = gram(form != DualForm::LastCoordinate);
    bool usedTrace = form != DualForm::LastCoordinate;
    if (usedTrace && G.det().isZero()) {
        if (form == DualForm::Trace)
            throw InseparableExtension("the trace form of F~/F is degenerate");
        G = gram(false);
        usedTrace = false;
    }
    if (traceUsed)
        *traceUsed = usedTrace;
    RatMatrix const D = O.lattice().basisMatrix() * G.inverse();
    std::vector<FVec> g;
    for (std::size_t j = 0; j < s; ++j)
        g.push_back(D.column(j));
    return ALattice::fromGenerators(F, s, g);
}

GorensteinReport gorensteinReport(Order const & O, DualForm form)
{
    GorensteinReport rep;
    FrobeniusField const & f = O.field();
    FqField const & F = f.field();
    ALattice const dual = dualLattice(O, form, &rep.traceUsed);
    // (O : O^v)
    std::optional<ALattice> colon;
    for (auto const & y : dual.columns()) {
        FVec const yi = f.inv(y);
        std::vector<FVec> g;
        for (auto const & c : O.basis())
            g.push_back(f.mul(c, yi));
        ALattice L = ALattice::fromGenerators(F, f.degree(), g);
        colon = colon ? latticeIntersect(*colon, L) : L;
    }
    std::vector<FVec> prod;
    for (auto const & x : dual.columns())
        for (auto const & y : colon->columns())
            prod.push_back(f.mul(x, y));
    ALattice const C = ALattice::fromGenerators(F, f.degree(), prod);
    rep.defect = latticeIndex(O.lattice(), C);
    rep.gorenstein = rep.defect.isOne();
    rep.nonGorensteinPrimes = primeFactors(rep.defect);
    return rep;
}

bool isGorenstein(Order const & O, DualForm form) { return gorensteinReport(O, form).gorenstein; }

bool isGorensteinAt(Order const & O, APoly const & ell, DualForm form)
{
    return !divides(ell, gorensteinReport(O, form).defect, nullptr);
}

std::vector<FracIdeal> enumerateIntegralIdeals(std::shared_ptr<Order const> const & O, int maxNormDeg, int minNormDeg)
{
    FrobeniusField const & f = O->field();
    FqField const & F = f.field();
    std::uint32_t const q = F.q();
    std::size_t const s = O->dim();
    auto const & table = O->multiplicationTable();
    auto const ob = O->basis();
    std::vector<FracIdeal> out;

    std::vector<int> degs(s, 0);
    std::function<void(std::size_t, int)> compositions;
    auto visit = [&]() {
        // digit layout: for each row i, d_i digits of the monic diagonal
        // below its leading term, then d_i digits for each j > i.
        std::size_t total = 0;
        for (std::size_t i = 0; i < s; ++i)
            total += degs[i] * (s - i);
        std::vector<std::uint32_t> digit(total, 0);
        while (true) {
            std::vector<std::vector<APoly>> H(s, std::vector<APoly>(s, APoly(F)));
            std::size_t pos = 0;
            for (std::size_t i = 0; i < s; ++i) {
                std::vector<FqElem> c(degs[i] + 1);
                for (int t = 0; t < degs[i]; ++t)
                    c[t] = FqElem{digit[pos++]};
                c[degs[i]] = F.one();
                H[i][i] = APoly(F, c);
                for (std::size_t j = i + 1; j < s; ++j) {
                    std::vector<FqElem> e(degs[i]);
                    for (int t = 0; t < degs[i]; ++t)
                        e[t] = FqElem{digit[pos++]};
                    H[i][j] = APoly(F, e);
                }
            }
            auto member = [&](std::vector<APoly> v) {
                for (std::size_t i = s; i-- > 0;) {
                    auto [qq, rr] = divmod(v[i], H[i][i]);
                    if (!rr.isZero())
                        return false;
                    if (qq.isZero())
                        continue;
                    for (std::size_t row = 0; row <= i; ++row)
                        v[row] -= qq * H[row][i];
                }
                return true;
            };
            bool closed = true;
            for (std::size_t kk = 1; kk < s && closed; ++kk)
                for (std::size_t j = 0; j < s && closed; ++j) {
                    std::vector<APoly> v(s, APoly(F));
                    for (std::size_t i = 0; i <= j; ++i)
                        if (!H[i][j].isZero())
                            for (std::size_t l = 0; l < s; ++l)
                                v[l] += H[i][j] * table[kk][i][l];
                    closed = member(std::move(v));
                }
            if (closed) {
                std::vector<FVec> gens;
                for (std::size_t j = 0; j < s; ++j) {
                    FVec col = zeroVec(F, s);
                    for (std::size_t i = 0; i <= j; ++i)
                        if (!H[i][j].isZero())
                            col = col + RatFunc(H[i][j]) * ob[i];
                    gens.push_back(std::move(col));
                }
                out.emplace_back(O, ALattice::fromGenerators(F, s, gens));
            }
            std::size_t idx = 0;
            while (idx < total && ++digit[idx] == q)
                digit[idx++] = 0;
            if (idx == total)
                break;
        }
    };
    compositions = [&](std::size_t i, int left) {
        if (i + 1 == s) {
            degs[i] = left;
            visit();
            return;
        }
        for (int d = 0; d <= left; ++d) {
            degs[i] = d;
            compositions(i + 1, left - d);
        }
    };
    for (int t = std::max(minNormDeg, 0); t <= maxNormDeg; ++t)
        compositions(0, t);
    return out;
}

std::vector<APoly> primeFactors(APoly const & a0)
{
    if (a0.isZero())
        throw DivisionByZero("factoring zero");
    FqField const & F = a0.field();
    std::vector<APoly> out;
    APoly a = a0.monic();
    std::uint32_t const q = F.q();
    for (int deg = 1; 2 * deg <= a.degree(); ++deg) {
        std::vector<std::uint32_t> digit(deg, 0);
        while (true) {
            std::vector<FqElem> c(deg + 1);
            for (int i = 0; i < deg; ++i)
                c[i] = FqElem{digit[i]};
            c[deg] = F.one();
            APoly const p(F, c);
            APoly quo;
            if (divides(p, a, &quo)) {
                out.push_back(p);
                a = quo;
                while (divides(p, a, &quo))
                    a = quo;
            }
            int idx = 0;
            while (idx < deg && ++digit[idx] == q)
                digit[idx++] = 0;
            if (idx == deg)
                break;
        }
    }
    if (a.degree() > 0)
        out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace drinfeld
