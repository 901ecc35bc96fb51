#include "drinfeld/module.hpp"

#include "drinfeld/errors.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

APoly minimalPolynomialOverFq(FieldTower const & k, KElem a)
{
    std::vector<KElem> conj{a};
    for (KElem c = k.frobQ(a, 1); c != a; c = k.frobQ(c, 1))
        conj.push_back(c);
    std::vector<KElem> poly{k.one()};
    for (KElem c : conj) {
        std::vector<KElem> next(poly.size() + 1, k.zero());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = k.add(next[i + 1], poly[i]);
            next[i] = k.sub(next[i], k.mul(c, poly[i]));
        }
        poly = std::move(next);
    }
    std::vector<FqElem> coeffs;
    for (KElem c : poly) {
        if (!k.inFq(c))
            throw InternalError("conjugate product left F_q");
        coeffs.push_back(k.toFq(c));
    }
    return APoly(k.fq(), coeffs);
}

DrinfeldModule::DrinfeldModule(std::shared_ptr<FieldTower const> k, SkewPoly phiT)
    : k_(std::move(k)), phiT_(std::move(phiT))
{
    if (!k_)
        throw ContextError("Drinfeld module without a field");
    if (phiT_.towerPtr() && phiT_.towerPtr() != k_.get())
        throw ContextError("phi_T lives over a different field");
    if (phiT_.degree() < 1)
        throw InputError("phi_T must have positive tau-degree");
    p_ = minimalPolynomialOverFq(*k_, t());
}

SkewPoly DrinfeldModule::evalA(APoly const & a) const
{
    SkewPoly acc(*k_);
    auto const & c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * phiT_ + SkewPoly::constant(*k_, k_->embed(c[i]));
    return acc;
}

int DrinfeldModule::height() const
{
    int const v = evalA(p_).valuation();
    if (v % d() != 0)
        throw InternalError("tau-valuation of phi_p is not divisible by d");
    return v / d();
}

bool DrinfeldModule::isIsogeny(SkewPoly const & u, DrinfeldModule const & psi) const
{
    if (psi.k_ != k_)
        throw ContextError("isogeny between modules over different fields");
    return !u.isZero() && u * phiT_ == psi.phiT_ * u;
}

std::optional<KElem> DrinfeldModule::isIsomorphic(DrinfeldModule const & psi) const
{
    if (psi.k_ != k_)
        throw ContextError("isomorphism between modules over different fields");
    if (psi.phiT_.degree() != phiT_.degree() || psi.t() != t())
        return std::nullopt;
    for (std::uint32_t v = 1; v < k_->size(); ++v) {
        KElem const c{v};
        if (phiT_.conjugated(c) == psi.phiT_)
            return c;
    }
    return std::nullopt;
}

std::string DrinfeldModule::elementToString(KElem a) const
{
    FieldTower const & k = *k_;
    std::size_t const nn = k.n();
    std::size_t const dd = static_cast<std::size_t>(d());
    FqMatrix M(k.fq(), nn, dd);
    KElem p = k.one();
    for (std::size_t j = 0; j < dd; ++j) {
        auto const dg = k.digits(p);
        for (std::size_t i = 0; i < nn; ++i)
            M(i, j) = dg[i];
        p = k.mul(p, t());
    }
    if (auto c = M.solve(k.digits(a)))
        return APoly(k.fq(), *c).toString("t");
    return k.toString(a, "x");
}

std::string DrinfeldModule::skewToString(SkewPoly const & f) const
{
    return f.toString([this](KElem c) { return elementToString(c); });
}

} // namespace drinfeld
