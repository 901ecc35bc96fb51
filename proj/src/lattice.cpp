#include "drinfeld/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

FVec zeroVec(FqField const & F, std::size_t s) { return FVec(s, RatFunc::zero(F)); }

FVec unitVec(FqField const & F, std::size_t s, std::size_t i)
{
    FVec v = zeroVec(F, s);
    v[i] = RatFunc::one(F);
    return v;
}

FVec operator+(FVec const & a, FVec const & b)
{
    FVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = r[i] + b[i];
    return r;
}

FVec operator-(FVec const & a, FVec const & b)
{
    FVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = r[i] - b[i];
    return r;
}

FVec operator*(RatFunc const & c, FVec const & v)
{
    FVec r(v);
    for (auto & x : r)
        x = c * x;
    return r;
}

bool isZero(FVec const & v)
{
    return std::all_of(v.begin(), v.end(), [](RatFunc const & x) { return x.isZero(); });
}

APoly commonDenominator(FVec const & v)
{
    APoly d;
    for (auto const & x : v)
        d = d.isZero() ? x.den() : lcm(d, x.den());
    return d;
}

RatMatrix::RatMatrix(FqField const & F, std::size_t rows, std::size_t cols)
    : F_(&F), rows_(rows), cols_(cols), a_(rows * cols, RatFunc::zero(F))
{
}

RatMatrix RatMatrix::identity(FqField const & F, std::size_t s)
{
    RatMatrix m(F, s, s);
    for (std::size_t i = 0; i < s; ++i)
        m(i, i) = RatFunc::one(F);
    return m;
}

RatMatrix RatMatrix::fromColumns(FqField const & F, std::vector<FVec> const & cols)
{
    std::size_t const rows = cols.empty() ? 0 : cols[0].size();
    RatMatrix m(F, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    return m;
}

FVec RatMatrix::column(std::size_t j) const
{
    FVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(*F_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix operator*(RatMatrix const & a, RatMatrix const & b)
{
    RatMatrix r(*a.F_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).isZero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r(i, j) = r(i, j) + a(i, k) * b(k, j);
        }
    return r;
}

FVec RatMatrix::apply(FVec const & v) const
{
    FVec r = zeroVec(*F_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].isZero())
                r[i] = r[i] + (*this)(i, j) * v[j];
    return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rrefInPlace(RatMatrix & m, RatFunc * detOut = nullptr)
{
    std::vector<std::size_t> pivots;
    RatFunc det = RatFunc::one(m.field());
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).isZero())
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != row) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(row, j));
            det = -det;
        }
        RatFunc const p = m(row, col);
        det = det * p;
        RatFunc const inv = p.inv();
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).isZero())
                continue;
            RatFunc const f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).isZero())
                    m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    if (detOut)
        *detOut = det;
    return pivots;
}

} // namespace

RatFunc RatMatrix::det() const
{
    if (rows_ != cols_)
        throw ContextError("determinant of a non-square matrix");
    RatMatrix c = *this;
    RatFunc d = RatFunc::one(*F_);
    if (rrefInPlace(c, &d).size() < rows_)
        return RatFunc::zero(*F_);
    return d;
}

RatFunc RatMatrix::trace() const
{
    RatFunc t = RatFunc::zero(*F_);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        t = t + (*this)(i, i);
    return t;
}

std::size_t RatMatrix::rank() const
{
    RatMatrix c = *this;
    return rrefInPlace(c).size();
}

RatMatrix RatMatrix::inverse() const
{
    if (rows_ != cols_)
        throw ContextError("inverse of a non-square matrix");
    std::size_t const s = rows_;
    RatMatrix aug(*F_, s, 2 * s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j)
            aug(i, j) = (*this)(i, j);
        aug(i, s + i) = RatFunc::one(*F_);
    }
    auto const piv = rrefInPlace(aug);
    if (piv.size() < s || piv[s - 1] != s - 1)
        throw DivisionByZero("singular matrix");
    RatMatrix inv(*F_, s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            inv(i, j) = aug(i, s + j);
    return inv;
}

std::optional<FVec> RatMatrix::solve(FVec const & b) const
{
    RatMatrix aug(*F_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    auto const piv = rrefInPlace(aug);
    if (!piv.empty() && piv.back() == cols_)
        return std::nullopt;
    FVec x = zeroVec(*F_, cols_);
    for (std::size_t r = 0; r < piv.size(); ++r)
        x[piv[r]] = aug(r, cols_);
    return x;
}

std::vector<FVec> RatMatrix::nullspace() const
{
    RatMatrix R = *this;
    auto const piv = rrefInPlace(R);
    std::vector<bool> isPivot(cols_, false);
    for (auto c : piv)
        isPivot[c] = true;
    std::vector<FVec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (isPivot[f])
            continue;
        FVec v = zeroVec(*F_, cols_);
        v[f] = RatFunc::one(*F_);
        for (std::size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = -R(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<APoly>> hnfColumns(FqField const & F, std::size_t s,
                                           std::vector<std::vector<APoly>> cols)
{
    auto nonzero = [](std::vector<APoly> const & c) {
        return std::any_of(c.begin(), c.end(), [](APoly const & x) { return !x.isZero(); });
    };
    std::vector<std::vector<APoly>> active;
    for (auto & c : cols)
        if (nonzero(c))
            active.push_back(std::move(c));
    std::vector<std::vector<APoly>> res(s);
    for (std::size_t i = s; i-- > 0;) {
        while (true) {
            std::size_t best = active.size();
            std::size_t count = 0;
            for (std::size_t c = 0; c < active.size(); ++c) {
                if (active[c][i].isZero())
                    continue;
                ++count;
                if (best == active.size() || active[c][i].degree() < active[best][i].degree())
                    best = c;
            }
            if (best == active.size())
                throw RankError("generators do not span a full-rank lattice");
            if (count == 1) {
                std::swap(active[best], active.back());
                res[i] = std::move(active.back());
                active.pop_back();
                break;
            }
            std::vector<APoly> const & p = active[best];
            for (std::size_t c = 0; c < active.size(); ++c) {
                if (c == best || active[c][i].isZero())
                    continue;
                APoly const q = active[c][i] / p[i];
                for (std::size_t r = 0; r <= i; ++r)
                    if (!p[r].isZero())
                        active[c][r] -= q * p[r];
            }
            std::vector<std::vector<APoly>> keep;
            for (auto & c : active)
                if (nonzero(c))
                    keep.push_back(std::move(c));
            active = std::move(keep);
        }
    }
    for (std::size_t j = 0; j < s; ++j) {
        FqElem const li = F.inv(res[j][j].lead());
        for (auto & x : res[j])
            x = x.scaled(li);
    }
    for (std::size_t j = 1; j < s; ++j)
        for (std::size_t i = j; i-- > 0;) {
            APoly const q = res[j][i] / res[i][i];
            if (q.isZero())
                continue;
            for (std::size_t r = 0; r <= i; ++r)
                res[j][r] -= q * res[i][r];
        }
    for (auto & c : res)
        for (auto & x : c)
            if (!x.fieldPtr())
                x = APoly(F);
    return res;
}

ALattice ALattice::fromGenerators(FqField const & F, std::size_t s, std::vector<FVec> const & gens)
{
    APoly D = APoly::constant(F, F.one());
    for (auto const & g : gens)
        for (auto const & x : g)
            if (!x.isZero())
                D = lcm(D, x.den());
    std::vector<std::vector<APoly>> cols;
    cols.reserve(gens.size());
    for (auto const & g : gens) {
        if (g.size() != s)
            throw ContextError("generator of wrong dimension");
        std::vector<APoly> c(s, APoly(F));
        for (std::size_t i = 0; i < s; ++i)
            if (!g[i].isZero())
                c[i] = g[i].num() * (D / g[i].den());
        cols.push_back(std::move(c));
    }
    ALattice L;
    L.F_ = &F;
    L.s_ = s;
    L.b_ = hnfColumns(F, s, std::move(cols));
    APoly g = D;
    for (auto const & c : L.b_)
        for (auto const & x : c)
            if (!g.isOne())
                g = gcd(g, x);
    if (!g.isOne()) {
        D = D / g;
        for (auto & c : L.b_)
            for (auto & x : c)
                x = x / g;
    }
    L.den_ = D;
    return L;
}

ALattice ALattice::identity(FqField const & F, std::size_t s)
{
    std::vector<FVec> gens;
    for (std::size_t i = 0; i < s; ++i)
        gens.push_back(unitVec(F, s, i));
    return fromGenerators(F, s, gens);
}

FVec ALattice::column(std::size_t j) const
{
    FVec v(s_);
    for (std::size_t i = 0; i < s_; ++i)
        v[i] = RatFunc(b_[j][i], den_);
    return v;
}

std::vector<FVec> ALattice::columns() const
{
    std::vector<FVec> c;
    for (std::size_t j = 0; j < s_; ++j)
        c.push_back(column(j));
    return c;
}

RatMatrix ALattice::basisMatrix() const { return RatMatrix::fromColumns(*F_, columns()); }

std::optional<std::vector<APoly>> ALattice::coordinates(FVec const & v) const
{
    RatFunc const D(den_);
    std::vector<APoly> x(s_, APoly(*F_));
    for (std::size_t i = s_; i-- > 0;) {
        RatFunc acc = D * v[i];
        for (std::size_t j = i + 1; j < s_; ++j)
            if (!b_[j][i].isZero() && !x[j].isZero())
                acc = acc - RatFunc(b_[j][i] * x[j]);
        RatFunc const xi = acc / RatFunc(b_[i][i]);
        if (!xi.isPolynomial())
            return std::nullopt;
        x[i] = xi.num();
    }
    return x;
}

bool ALattice::contains(ALattice const & M) const
{
    for (std::size_t j = 0; j < M.s_; ++j)
        if (!contains(M.column(j)))
            return false;
    return true;
}

RatFunc ALattice::det() const
{
    APoly num = APoly::constant(*F_, F_->one());
    for (std::size_t i = 0; i < s_; ++i)
        num = num * b_[i][i];
    return RatFunc(num, den_.pow(static_cast<unsigned>(s_)));
}

ALattice ALattice::scaled(RatFunc const & c) const
{
    if (c.isZero())
        throw RankError("scaling a lattice by zero");
    std::vector<FVec> g;
    for (std::size_t j = 0; j < s_; ++j)
        g.push_back(c * column(j));
    return fromGenerators(*F_, s_, g);
}

bool operator<(ALattice const & a, ALattice const & b)
{
    if (!(a.den_ == b.den_))
        return a.den_ < b.den_;
    for (std::size_t j = 0; j < a.s_; ++j)
        for (std::size_t i = 0; i < a.s_; ++i)
            if (!(a.b_[j][i] == b.b_[j][i]))
                return a.b_[j][i] < b.b_[j][i];
    return false;
}

std::string ALattice::toString(std::string const & var) const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < s_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < s_; ++j)
            os << (j ? ", " : "") << b_[j][i].toString(var);
        os << "]";
    }
    os << "]";
    if (!den_.isOne())
        os << "/(" << den_.toString(var) << ")";
    return os.str();
}

ALattice latticeSum(ALattice const & L, ALattice const & M)
{
    auto g = L.columns();
    for (auto & c : M.columns())
        g.push_back(std::move(c));
    return ALattice::fromGenerators(L.field(), L.dim(), g);
}

ALattice standardDual(ALattice const & L)
{
    RatMatrix const inv = L.basisMatrix().transpose().inverse();
    std::vector<FVec> g;
    for (std::size_t j = 0; j < L.dim(); ++j)
        g.push_back(inv.column(j));
    return ALattice::fromGenerators(L.field(), L.dim(), g);
}

ALattice latticeIntersect(ALattice const & L, ALattice const & M)
{
    return standardDual(latticeSum(standardDual(L), standardDual(M)));
}

APoly latticeIndex(ALattice const & L, ALattice const & M)
{
    if (!L.contains(M))
        throw NotSublattice("lattice is not contained in the reference lattice");
    RatFunc const r = M.det() / L.det();
    if (!r.isPolynomial())
        throw InternalError("non-integral lattice index");
    return r.num().monic();
}

} // namespace drinfeld
