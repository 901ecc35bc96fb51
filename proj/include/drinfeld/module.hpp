#pragma once

#include <memory>
#include <optional>
#include <string>

#include "drinfeld/apoly.hpp"
#include "drinfeld/skew.hpp"

namespace drinfeld {

/// Drinfeld A-module over k determined by phi_T.  The characteristic
/// t = gamma(T) is the constant term of phi_T, and frak p is its minimal
/// polynomial over F_q.
class DrinfeldModule {
  public:
    DrinfeldModule(std::shared_ptr<FieldTower const> k, SkewPoly phiT);

    FieldTower const & tower() const { return *k_; }
    std::shared_ptr<FieldTower const> const & towerPtr() const { return k_; }
    FqField const & fq() const { return k_->fq(); }
    SkewPoly const & phiT() const { return phiT_; }
    int rank() const { return phiT_.degree(); }
    KElem t() const { return phiT_.coeff(0); }
    APoly const & charPrime() const { return p_; }
    int d() const { return p_.degree(); }
    int n() const { return static_cast<int>(k_->n()); }

    /// phi_a, by Horner evaluation in k{tau}.
    SkewPoly evalA(APoly const & a) const;
    /// tau-valuation of phi_p divided by d.
    int height() const;
    /// pi = tau^n.
    SkewPoly frobenius() const { return SkewPoly::tau(*k_, k_->n()); }

    bool isIsogeny(SkewPoly const & u, DrinfeldModule const & psi) const;
    /// Some c in k^x with c phi_T c^{-1} = psi_T, by exhausting k^x.
    std::optional<KElem> isIsomorphic(DrinfeldModule const & psi) const;

    /// Element of k as a polynomial in t when it lies in F_q(t), otherwise
    /// in the tower generator x.
    std::string elementToString(KElem a) const;
    std::string skewToString(SkewPoly const & f) const;
    std::string toString() const { return skewToString(phiT_); }

  private:
    std::shared_ptr<FieldTower const> k_;
    SkewPoly phiT_;
    APoly p_;
};

/// Minimal polynomial of a over F_q (monic), via its Frobenius orbit.
APoly minimalPolynomialOverFq(FieldTower const & k, KElem a);

} // namespace drinfeld
