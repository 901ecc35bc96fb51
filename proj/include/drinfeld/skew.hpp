#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/field.hpp"

namespace drinfeld {

/// Element of the twisted polynomial ring k{tau}, tau * a = a^q * tau.
/// Coefficients little-endian in tau, no trailing zeros.
class SkewPoly {
  public:
    SkewPoly() = default;
    explicit SkewPoly(FieldTower const & k) : k_(&k) {}
    SkewPoly(FieldTower const & k, std::vector<KElem> coeffs);

    static SkewPoly constant(FieldTower const & k, KElem c) { return SkewPoly(k, {c}); }
    static SkewPoly one(FieldTower const & k) { return constant(k, k.one()); }
    /// c * tau^i
    static SkewPoly monomial(FieldTower const & k, KElem c, std::size_t i);
    static SkewPoly tau(FieldTower const & k, std::size_t i = 1) { return monomial(k, k.one(), i); }

    /// Parses text such as "(t^3+t+1)+(t^3+t^2)*tau+tau^3" with parentheses,
    /// integer constants, the symbol `t` (bound to tValue), `x` (the
    /// generator of k) and `tau`.
    /// Products are taken in k{tau}, so "tau*t" means t^q*tau.
    static SkewPoly parse(FieldTower const & k, std::string const & text, KElem tValue);

    FieldTower const & tower() const;
    FieldTower const * towerPtr() const { return k_; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    bool isOne() const { return c_.size() == 1 && c_[0] == KElem{1}; }
    bool isMonic() const { return !c_.empty() && c_.back() == KElem{1}; }
    KElem lead() const { return c_.empty() ? KElem{0} : c_.back(); }
    KElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : KElem{0}; }
    std::vector<KElem> const & coeffs() const { return c_; }
    /// Least i with nonzero coefficient, -1 for zero.
    int valuation() const;

    /// Left multiplication by the inverse of the leading coefficient.
    SkewPoly monic() const;
    /// Left multiplication by a constant.
    SkewPoly scaledLeft(KElem c) const;
    /// c * f * c^{-1}; coefficient i becomes c^{1-q^i} g_i.
    SkewPoly conjugated(KElem c) const;
    /// Applies a -> a^{q^j} to every coefficient.
    SkewPoly twisted(long long j) const;

    SkewPoly operator-() const;
    SkewPoly & operator+=(SkewPoly const & o);
    SkewPoly & operator-=(SkewPoly const & o);
    friend SkewPoly operator+(SkewPoly a, SkewPoly const & b) { return a += b; }
    friend SkewPoly operator-(SkewPoly a, SkewPoly const & b) { return a -= b; }
    friend SkewPoly operator*(SkewPoly const & a, SkewPoly const & b);
    SkewPoly pow(unsigned e) const;

    friend bool operator==(SkewPoly const & a, SkewPoly const & b) { return a.c_ == b.c_; }
    friend bool operator<(SkewPoly const & a, SkewPoly const & b);

    std::string toString(char const * var = "t") const;
    std::string toString(std::function<std::string(KElem)> const & coeff) const;

  private:
    void trim();
    void check(SkewPoly const & o) const;

    FieldTower const * k_ = nullptr;
    std::vector<KElem> c_;
};

struct SkewDivMod {
    SkewPoly quo, rem;
};

/// f = quo * g + rem with deg rem < deg g.
SkewDivMod rdivmod(SkewPoly const & f, SkewPoly const & g);

/// True iff g right-divides f; the quotient is stored in quo if given.
bool rdivides(SkewPoly const & g, SkewPoly const & f, SkewPoly * quo = nullptr);

/// Monic generator of the left ideal k{tau}f_1 + ... + k{tau}f_m.
SkewPoly rgcd(std::vector<SkewPoly> const & fs);

struct SkewBezout {
    SkewPoly gcd;
    std::vector<SkewPoly> cofactors; // sum cofactors[i] * fs[i] == gcd
};

/// rgcd together with left cofactors.
SkewBezout rgcdBezout(std::vector<SkewPoly> const & fs);

/// Two-argument form: a*f + b*g == rgcd(f, g).
std::pair<SkewPoly, SkewPoly> bezout(SkewPoly const & f, SkewPoly const & g);

} // namespace drinfeld
