#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/field.hpp"

namespace drinfeld {

/// Polynomial over F_q, little-endian, no trailing zeros.  Used both for
/// A = F_q[T] and, with a different display variable, for F_q[pi].
class APoly {
  public:
    APoly() = default;
    explicit APoly(FqField const & F) : F_(&F) {}
    APoly(FqField const & F, std::vector<FqElem> coeffs);

    static APoly constant(FqField const & F, FqElem c);
    static APoly constant(FqField const & F, long long c) { return constant(F, F.fromInt(c)); }
    static APoly monomial(FqField const & F, FqElem c, std::size_t k);
    /// The variable itself.
    static APoly var(FqField const & F) { return monomial(F, F.one(), 1); }

    /// Parses "T^4+T+1", "2*T^2-T", "x^3+2"; the variable name is any
    /// identifier; coefficients are integers mod p.
    static APoly parse(FqField const & F, std::string const & text, std::string const & var = "T");

    FqField const * fieldPtr() const { return F_; }
    FqField const & field() const;

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    bool isOne() const;
    bool isConstant() const { return c_.size() <= 1; }
    bool isMonic() const;
    FqElem lead() const;
    FqElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FqElem{0}; }
    std::vector<FqElem> const & coeffs() const { return c_; }
    /// Lowest i with a nonzero coefficient (-1 for zero).
    int valuation() const;

    APoly monic() const;
    APoly derivative() const;
    APoly scaled(FqElem c) const;
    APoly shifted(std::size_t k) const; // multiply by var^k
    FqElem eval(FqElem x) const;

    APoly operator-() const;
    APoly & operator+=(APoly const & o);
    APoly & operator-=(APoly const & o);
    APoly & operator*=(APoly const & o) { return *this = *this * o; }
    friend APoly operator+(APoly a, APoly const & b) { return a += b; }
    friend APoly operator-(APoly a, APoly const & b) { return a -= b; }
    friend APoly operator*(APoly const & a, APoly const & b);

    /// Euclidean division: a = q*b + r with deg r < deg b.
    friend std::pair<APoly, APoly> divmod(APoly const & a, APoly const & b);
    friend APoly operator/(APoly const & a, APoly const & b) { return divmod(a, b).first; }
    friend APoly operator%(APoly const & a, APoly const & b) { return divmod(a, b).second; }
    /// True iff b divides a; sets quo accordingly.
    friend bool divides(APoly const & b, APoly const & a, APoly * quo);

    APoly pow(unsigned k) const;

    friend bool operator==(APoly const & a, APoly const & b) { return a.c_ == b.c_; }
    /// Total order (degree first, then coefficients from the top).
    friend bool operator<(APoly const & a, APoly const & b);

    std::string toString(std::string const & var = "T") const;

  private:
    void trim();
    friend FqField const * pick(APoly const & a, APoly const & b);

    FqField const * F_ = nullptr;
    std::vector<FqElem> c_;
};

/// Monic gcd (zero if both are zero).
APoly gcd(APoly const & a, APoly const & b);
APoly lcm(APoly const & a, APoly const & b);
/// Extended gcd: s*a + t*b = g (g monic).
struct XGcd {
    APoly g, s, t;
};
XGcd xgcd(APoly const & a, APoly const & b);
APoly powmod(APoly const & a, unsigned long long k, APoly const & m);

/// Value of f at an element of k (coefficients embedded from F_q).
KElem evalInK(FieldTower const & k, APoly const & f, KElem x);
/// All roots of f in k, ascending by code.  Brute force over k.
std::vector<KElem> rootsInK(FieldTower const & k, APoly const & f);

/// Element of F = F_q(T), reduced with monic denominator.
class RatFunc {
  public:
    RatFunc() = default;
    explicit RatFunc(APoly num);
    RatFunc(APoly num, APoly den);

    static RatFunc zero(FqField const & F) { return RatFunc(APoly(F)); }
    static RatFunc one(FqField const & F) { return RatFunc(APoly::constant(F, F.one())); }

    APoly const & num() const { return num_; }
    APoly const & den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    bool isPolynomial() const { return den_.isOne(); }
    /// deg num - deg den; large negative for zero.
    int degree() const;

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend RatFunc operator+(RatFunc const & a, RatFunc const & b);
    friend RatFunc operator-(RatFunc const & a, RatFunc const & b) { return a + (-b); }
    friend RatFunc operator*(RatFunc const & a, RatFunc const & b);
    friend RatFunc operator/(RatFunc const & a, RatFunc const & b);
    RatFunc inv() const;

    friend bool operator==(RatFunc const & a, RatFunc const & b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string toString(std::string const & var = "T") const;

  private:
    void normalize();
    APoly num_, den_;
};

/// Sparse multivariate polynomial text parser used for golden inputs:
/// returns (exponent vector, integer coefficient) terms.  Accepts integers,
/// the given variable names, '^', '*', '+', '-' and parentheses-free input.
std::vector<std::pair<std::vector<unsigned>, long long>> parseSparse(
    std::string const & text, std::vector<std::string> const & vars);

} // namespace drinfeld
