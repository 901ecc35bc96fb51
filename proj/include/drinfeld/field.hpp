#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace drinfeld {

/// Element of F_q, encoded as sum c_j p^j where c_j are the F_p coordinates
/// in the power basis of the defining root y.
struct FqElem {
    std::uint32_t v = 0;
    friend constexpr auto operator<=>(FqElem, FqElem) = default;
};

/// Element of k = F_{q^n}, encoded as sum a_i q^i where a_i is the FqElem
/// code of the coefficient of x^i.
struct KElem {
    std::uint32_t v = 0;
    friend constexpr auto operator<=>(KElem, KElem) = default;
};

/// F_q = F_p[y]/(h).  Arithmetic is table driven; q is tiny at desk scale.
class FqField {
  public:
    FqField(std::uint32_t p, std::vector<std::uint32_t> h);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    std::vector<std::uint32_t> const & h() const { return h_; }

    FqElem zero() const { return {0}; }
    FqElem one() const { return {1}; }
    FqElem fromInt(long long c) const;

    FqElem add(FqElem a, FqElem b) const { return {add_[a.v * q_ + b.v]}; }
    FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
    FqElem mul(FqElem a, FqElem b) const { return {mul_[a.v * q_ + b.v]}; }
    FqElem neg(FqElem a) const { return {neg_[a.v]}; }
    FqElem inv(FqElem a) const;
    FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }

    /// F_p coordinates of a (length e).
    std::vector<std::uint32_t> coords(FqElem a) const;
    FqElem fromCoords(std::vector<std::uint32_t> const & c) const;

    std::string toString(FqElem a) const;

  private:
    std::uint32_t p_, e_, q_;
    std::vector<std::uint32_t> h_;
    std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

/// Specification of the tower F_p c F_q = F_p[y]/(h) c k = F_q[x]/(g).
struct TowerSpec {
    std::uint32_t p = 2;
    std::vector<std::uint32_t> h{0, 1};       // over F_p, little-endian, monic
    std::vector<std::vector<std::uint32_t>> g; // over F_q, each entry F_p coords

    std::uint32_t e() const { return static_cast<std::uint32_t>(h.size() - 1); }
    std::uint32_t n() const { return static_cast<std::uint32_t>(g.size() - 1); }
    std::string key() const;
};

/// The finite field k = F_{q^n} presented as a two step tower.
///
/// Towers are interned: make() returns a shared instance that lives for the
/// rest of the process, so values holding a raw `FieldTower const *` or
/// `FqField const *` never dangle.
class FieldTower {
  public:
    static std::shared_ptr<FieldTower const> make(TowerSpec const & spec);

    /// Tower over the prime field F_p (e = 1) with k given by the first
    /// monic irreducible of degree n in lexicographic order.
    static std::shared_ptr<FieldTower const> primeTower(std::uint32_t p, std::uint32_t n);

    TowerSpec const & spec() const { return spec_; }
    FqField const & fq() const { return fq_; }
    std::uint32_t p() const { return fq_.p(); }
    std::uint32_t q() const { return fq_.q(); }
    std::uint32_t n() const { return n_; }
    std::uint32_t size() const { return size_; }
    std::vector<FqElem> const & g() const { return g_; }

    KElem zero() const { return {0}; }
    KElem one() const { return {1}; }
    /// The class of x in F_q[x]/(g).
    KElem generator() const;

    KElem add(KElem a, KElem b) const;
    KElem sub(KElem a, KElem b) const;
    KElem neg(KElem a) const;
    KElem mul(KElem a, KElem b) const;
    KElem inv(KElem a) const;
    KElem div(KElem a, KElem b) const { return mul(a, inv(b)); }
    KElem pow(KElem a, long long k) const;
    /// a^(q^j).
    KElem frobQ(KElem a, long long j) const;

    KElem embed(FqElem c) const { return {c.v}; }
    bool inFq(KElem a) const { return a.v < fq_.q(); }
    FqElem toFq(KElem a) const;

    std::vector<FqElem> digits(KElem a) const;
    KElem fromDigits(std::vector<FqElem> const & d) const;

    /// Discrete log with respect to the internal primitive element.
    std::uint32_t log(KElem a) const;
    KElem exp(std::uint64_t k) const { return {exp_[k % (size_ - 1)]}; }

    std::vector<KElem> elements() const;

    std::string toString(KElem a, char const * var = "t") const;

    explicit FieldTower(TowerSpec spec);

  private:
    KElem mulSlow(KElem a, KElem b) const;

    TowerSpec spec_;
    FqField fq_;
    std::uint32_t n_;
    std::uint32_t size_;
    std::vector<FqElem> g_;
    std::vector<std::uint32_t> exp_, log_;
    std::vector<std::uint32_t> qpow_; // q^j mod (size-1), j < n
};

/// Brute-force irreducibility over F_q by trial division with every monic
/// polynomial of degree <= deg/2.
bool isIrreducibleOver(FqField const & F, std::vector<FqElem> const & f);

/// Returns the lexicographically first monic irreducible polynomial of the
/// given degree over F.
std::vector<FqElem> firstIrreducible(FqField const & F, std::uint32_t degree);

} // namespace drinfeld
