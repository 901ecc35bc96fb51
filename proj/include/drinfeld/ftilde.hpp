#pragma once

#include <memory>
#include <string>
#include <vector>

#include "drinfeld/lattice.hpp"

namespace drinfeld {

/// F~ = F[x]/(m(x)) with m monic over A, presented on the power basis
/// 1, pi, ..., pi^{s-1}.  Elements are FVecs of length s.
class FrobeniusField {
  public:
    /// m given by its coefficients m_0, ..., m_s over A; m_s must be 1.
    FrobeniusField(FqField const & F, std::vector<APoly> m);

    FqField const & field() const { return *F_; }
    std::size_t degree() const { return m_.size() - 1; }
    std::vector<APoly> const & m() const { return m_; }

    FVec one() const { return unitVec(*F_, degree(), 0); }
    FVec pi() const;
    FVec fromA(APoly const & a) const;
    FVec mul(FVec const & a, FVec const & b) const;
    FVec pow(FVec const & a, unsigned e) const;
    /// Matrix of y -> a*y on the power basis.
    RatMatrix mulMatrix(FVec const & a) const;
    FVec inv(FVec const & a) const;
    RatFunc norm(FVec const & a) const { return mulMatrix(a).det(); }
    RatFunc trace(FVec const & a) const { return mulMatrix(a).trace(); }
    /// Monic minimal polynomial of a over F, coefficients low to high.
    std::vector<RatFunc> minimalPolynomial(FVec const & a) const;

    /// e.g. "(T+1)*pi^2+pi+T" or "(pi^2+1)/(T+1)".
    std::string toString(FVec const & a, std::string const & piVar = "pi", std::string const & tVar = "T") const;

  private:
    FqField const * F_;
    std::vector<APoly> m_;
};

/// Value type wrapper: an element of F~ with a single common denominator.
class FTildeElem {
  public:
    FTildeElem(std::shared_ptr<FrobeniusField const> f, FVec v);

    std::shared_ptr<FrobeniusField const> const & frobeniusField() const { return f_; }
    FVec const & coords() const { return v_; }
    /// Coordinates over A after clearing the common denominator.
    std::vector<APoly> numerator() const;
    APoly denominator() const { return commonDenominator(v_); }
    bool isZero() const { return drinfeld::isZero(v_); }

    friend FTildeElem operator+(FTildeElem const & a, FTildeElem const & b);
    friend FTildeElem operator-(FTildeElem const & a, FTildeElem const & b);
    friend FTildeElem operator*(FTildeElem const & a, FTildeElem const & b);
    FTildeElem inv() const;
    RatFunc norm() const { return f_->norm(v_); }
    RatFunc trace() const { return f_->trace(v_); }
    std::vector<RatFunc> minimalPolynomial() const { return f_->minimalPolynomial(v_); }

    friend bool operator==(FTildeElem const & a, FTildeElem const & b) { return a.v_ == b.v_; }
    std::string toString() const { return f_->toString(v_); }

  private:
    std::shared_ptr<FrobeniusField const> f_;
    FVec v_;
};

} // namespace drinfeld
