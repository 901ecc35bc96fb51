#include "drinfeld/ftilde.hpp"

#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

FrobeniusField::FrobeniusField(FqField const & F, std::vector<APoly> m) : F_(&F), m_(std::move(m))
{
    if (m_.size() < 2 || !m_.back().isOne())
        throw InputError("minimal polynomial must be monic of positive degree");
    for (auto & c : m_)
        if (!c.fieldPtr())
            c = APoly(F);
}

FVec FrobeniusField::pi() const
{
    if (degree() == 1)
        return FVec{RatFunc(-m_[0])};
    return unitVec(*F_, degree(), 1);
}

FVec FrobeniusField::fromA(APoly const & a) const
{
    FVec v = zeroVec(*F_, degree());
    v[0] = RatFunc(a);
    return v;
}

FVec FrobeniusField::mul(FVec const & a, FVec const & b) const
{
    std::size_t const s = degree();
    std::vector<RatFunc> prod(2 * s - 1, RatFunc::zero(*F_));
    for (std::size_t i = 0; i < s; ++i) {
        if (a[i].isZero())
            continue;
        for (std::size_t j = 0; j < s; ++j)
            if (!b[j].isZero())
                prod[i + j] = prod[i + j] + a[i] * b[j];
    }
    for (std::size_t k = 2 * s - 1; k-- > s;) {
        if (prod[k].isZero())
            continue;
        RatFunc const c = prod[k];
        for (std::size_t i = 0; i < s; ++i)
            if (!m_[i].isZero())
                prod[k - s + i] = prod[k - s + i] - c * RatFunc(m_[i]);
    }
    prod.resize(s);
    return prod;
}

FVec FrobeniusField::pow(FVec const & a, unsigned e) const
{
    FVec r = one();
    FVec b = a;
    while (e) {
        if (e & 1)
            r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

RatMatrix FrobeniusField::mulMatrix(FVec const & a) const
{
    std::size_t const s = degree();
    std::vector<FVec> cols;
    FVec y = a;
    for (std::size_t j = 0; j < s; ++j) {
        cols.push_back(y);
        if (j + 1 < s)
            y = mul(y, unitVec(*F_, s, 1));
    }
    return RatMatrix::fromColumns(*F_, cols);
}

FVec FrobeniusField::inv(FVec const & a) const
{
    if (isZero(a))
        throw DivisionByZero("inverse of zero in the Frobenius field");
    auto x = mulMatrix(a).solve(one());
    if (!x)
        throw InternalError("element of the Frobenius field is not invertible");
    return *x;
}

std::vector<RatFunc> FrobeniusField::minimalPolynomial(FVec const & a) const
{
    std::size_t const s = degree();
    std::vector<FVec> powers{one()};
    while (true) {
        FVec next = mul(powers.back(), a);
        RatMatrix M = RatMatrix::fromColumns(*F_, powers);
        if (auto c = M.solve(next)) {
            std::vector<RatFunc> mp;
            for (auto const & x : *c)
                mp.push_back(-x);
            mp.push_back(RatFunc::one(*F_));
            return mp;
        }
        powers.push_back(std::move(next));
        if (powers.size() > s + 1)
            throw InternalError("minimal polynomial search exceeded the field degree");
    }
}

std::string FrobeniusField::toString(FVec const & a, std::string const & piVar, std::string const & tVar) const
{
    APoly const D = commonDenominator(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i].isZero())
            continue;
        APoly const c = a[i].num() * (D / a[i].den());
        if (!first)
            os << "+";
        first = false;
        std::string cs = c.toString(tVar);
        bool const compound = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << cs;
            continue;
        }
        if (!c.isOne())
            os << (compound ? "(" + cs + ")" : cs) << "*";
        os << piVar;
        if (i > 1)
            os << "^" << i;
    }
    if (first)
        return "0";
    if (D.isOne())
        return os.str();
    std::string num = os.str();
    if (num.find('+') != std::string::npos)
        num = "(" + num + ")";
    return num + "/(" + D.toString(tVar) + ")";
}

FTildeElem::FTildeElem(std::shared_ptr<FrobeniusField const> f, FVec v) : f_(std::move(f)), v_(std::move(v))
{
    if (v_.size() != f_->degree())
        throw ContextError("coordinate vector does not match the Frobenius field degree");
}

std::vector<APoly> FTildeElem::numerator() const
{
    APoly const D = denominator();
    std::vector<APoly> r;
    for (auto const & x : v_)
        r.push_back(x.isZero() ? APoly(f_->field()) : x.num() * (D / x.den()));
    return r;
}

static void sameField(FTildeElem const & a, FTildeElem const & b)
{
    if (a.frobeniusField() != b.frobeniusField())
        throw ContextError("elements of different Frobenius fields");
}

FTildeElem operator+(FTildeElem const & a, FTildeElem const & b)
{
    sameField(a, b);
    return FTildeElem(a.f_, a.v_ + b.v_);
}

FTildeElem operator-(FTildeElem const & a, FTildeElem const & b)
{
    sameField(a, b);
    return FTildeElem(a.f_, a.v_ - b.v_);
}

FTildeElem operator*(FTildeElem const & a, FTildeElem const & b)
{
    sameField(a, b);
    return FTildeElem(a.f_, a.f_->mul(a.v_, b.v_));
}

FTildeElem FTildeElem::inv() const { return FTildeElem(f_, f_->inv(v_)); }

} // namespace drinfeld
