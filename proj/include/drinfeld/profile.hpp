#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "drinfeld/ftilde.hpp"
#include "drinfeld/module.hpp"

namespace drinfeld {

/// (e_K, e_F, f_F, f_K)
using InvariantTuple = std::array<int, 4>;

/// All positive integer tuples with e_K f_F = NK/d, e_F f_F = H NK/n,
/// e_K H d = e_F n and f_K = f_F d.
std::vector<InvariantTuple> solveRamificationInvariants(int n, int d, int H, int NK);

struct LocalMaximality {
    int lhs = 0; // ceil(n / (H d))
    int rhs = 0; // NK / d
    bool verdict = false;
};

struct ClosedFormReport {
    bool ordinaryCondition = false;   // H <= r / s
    bool primeFieldCondition = false; // d == n
    bool commutative = false;         // s == r
    /// Every fired sufficient condition agrees with the verdict, and for
    /// commutative End the verdict equals (H == 1 or d == n).
    bool consistent = true;
};

/// Frobenius invariants of a Drinfeld module.
class FrobeniusProfile {
  public:
    explicit FrobeniusProfile(DrinfeldModule phi);

    DrinfeldModule const & module() const { return phi_; }
    FqField const & fq() const { return phi_.fq(); }
    /// Coefficients m_0..m_s of m(x) over A (m_s = 1).
    std::vector<APoly> const & m() const { return m_; }
    int s() const { return static_cast<int>(m_.size()) - 1; }
    /// m~ as coefficients of T^j, each a polynomial in pi over F_q,
    /// scaled so that the leading coefficient is 1.
    std::vector<APoly> const & mTilde() const { return mTilde_; }
    /// The F_q^x multiple removed from m~ by the normalisation.
    FqElem mTildeUnit() const { return unit_; }
    int NK() const { return NK_; }
    int H() const { return H_; }
    int d() const { return phi_.d(); }
    int n() const { return phi_.n(); }
    int r() const { return phi_.rank(); }
    bool isOrdinary() const { return H_ == 1; }
    bool isCommutative() const { return s() == r(); }
    LocalMaximality const & localMaximality() const { return lm_; }
    bool isLocallyMaximal() const { return lm_.verdict; }
    std::vector<InvariantTuple> const & invariantSolutions() const { return solutions_; }
    ClosedFormReport closedFormChecks() const;

    std::shared_ptr<FrobeniusField const> const & frobeniusField() const { return field_; }
    bool isSeparable() const;

    std::string mText() const;
    std::string mTildeText() const;

    /// m(pi) == 0 in k{tau}, recomputed by skew evaluation.
    bool verifyMinpoly() const;
    /// m(0) == unit * p^{NK/d}.
    bool verifyReduction() const;

  private:
    DrinfeldModule phi_;
    std::vector<APoly> m_;
    std::vector<APoly> mTilde_;
    FqElem unit_{1};
    int NK_ = 0;
    int H_ = 0;
    LocalMaximality lm_;
    std::vector<InvariantTuple> solutions_;
    std::shared_ptr<FrobeniusField const> field_;
};

/// Renders sum_j c_j X^j with polynomial coefficients c_j in `inner`.
std::string bivariateToString(std::vector<APoly> const & coeffs, std::string const & outer,
                              std::string const & inner);

/// Reads "x^3+T*x^2+x+T^4+T+1" into coefficient polynomials in `inner`.
std::vector<APoly> parseBivariate(FqField const & F, std::string const & text, std::string const & outer,
                                  std::string const & inner);

/// Transpose of a bivariate coefficient table: input indexed by the outer
/// variable with coefficients in the inner one, output the other way round.
std::vector<APoly> transposeBivariate(FqField const & F, std::vector<APoly> const & coeffs);

} // namespace drinfeld
