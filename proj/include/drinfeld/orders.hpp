#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/profile.hpp"

namespace drinfeld {

/// An A-order in F~, as a lattice in pi-power coordinates.
class Order {
  public:
    /// Verifies that L contains 1 and is closed under multiplication.
    Order(std::shared_ptr<FrobeniusField const> f, ALattice L);

    std::shared_ptr<FrobeniusField const> const & frobeniusField() const { return f_; }
    FrobeniusField const & field() const { return *f_; }
    ALattice const & lattice() const { return L_; }
    std::size_t dim() const { return L_.dim(); }
    std::vector<FVec> basis() const { return L_.columns(); }
    bool contains(FVec const & x) const { return L_.contains(x); }

    /// Coordinates of x in the HNF basis of the order, if x lies in it.
    std::optional<std::vector<APoly>> coordinates(FVec const & x) const { return L_.coordinates(x); }
    /// table[i][j] = coordinates of basis_i * basis_j.
    std::vector<std::vector<std::vector<APoly>>> const & multiplicationTable() const { return table_; }

    friend bool operator==(Order const & a, Order const & b) { return a.L_ == b.L_; }

  private:
    std::shared_ptr<FrobeniusField const> f_;
    ALattice L_;
    std::vector<std::vector<std::vector<APoly>>> table_;
};

/// A[pi] = A[x]/(m): the identity lattice in pi-power coordinates.
std::shared_ptr<Order const> orderAPi(FrobeniusProfile const & P);

/// End_k(phi) with its skew realisation.
class EndRing {
  public:
    /// Requires s = r; throws NonCommutativeEndomorphismRing otherwise.
    static std::shared_ptr<EndRing const> compute(std::shared_ptr<FrobeniusProfile const> P);
    static std::shared_ptr<EndRing const> compute(DrinfeldModule const & phi);

    FrobeniusProfile const & profile() const { return *P_; }
    std::shared_ptr<FrobeniusProfile const> const & profilePtr() const { return P_; }
    DrinfeldModule const & module() const { return P_->module(); }
    std::shared_ptr<Order const> const & order() const { return order_; }
    ALattice const & lattice() const { return order_->lattice(); }
    std::size_t rank() const { return omega_.size(); }

    /// Reduced A-basis omega_1 = 1, ..., omega_s: the leading coefficients of
    /// the phi_{T^j} omega_i are F_q-independent in every tau-degree.
    std::vector<SkewPoly> const & basis() const { return omega_; }
    std::vector<int> const & degrees() const { return delta_; }
    /// pi-power coordinates of each omega_i.
    std::vector<FVec> const & basisCoords() const { return coords_; }
    /// table[i][j] = omega-coordinates of omega_i * omega_j.
    std::vector<std::vector<std::vector<APoly>>> const & multiplicationTable() const { return table_; }

    /// Coordinates of x in the omega basis, if x is in E.
    std::optional<std::vector<APoly>> omegaCoordinates(FVec const & x) const;
    FVec fromOmega(std::vector<APoly> const & a) const;
    SkewPoly skewFromOmega(std::vector<APoly> const & a) const;
    /// Skew realisation of x in E; throws NotSublattice when x is not in E.
    SkewPoly toSkew(FVec const & x) const;
    /// pi-power coordinates of u, or nullopt when u is not in E.
    std::optional<FVec> fromSkew(SkewPoly const & u) const;
    std::optional<std::vector<APoly>> omegaCoordinatesOfSkew(SkewPoly const & u) const;
    /// tau-degree of sum a_i omega_i, read off the reduced basis.
    int tauDegree(std::vector<APoly> const & a) const;

    bool isAPi() const;
    /// chi(E / A[pi]).
    APoly indexOverAPi() const;

  private:
    EndRing() = default;

    std::shared_ptr<FrobeniusProfile const> P_;
    std::vector<SkewPoly> omega_;
    std::vector<int> delta_;
    std::vector<FVec> coords_;
    std::optional<RatMatrix> omegaInv_;
    std::shared_ptr<Order const> order_;
    std::vector<std::vector<std::vector<APoly>>> table_;
};

/// A fractional ideal of an order: a lattice in pi-power coordinates closed
/// under multiplication by the order.
class FracIdeal {
  public:
    /// Verifies closure under the order.
    FracIdeal(std::shared_ptr<Order const> order, ALattice L);
    /// O-span of the given elements.
    static FracIdeal generatedBy(std::shared_ptr<Order const> order, std::vector<FVec> const & gens);
    static FracIdeal unit(std::shared_ptr<Order const> order);
    static FracIdeal principal(std::shared_ptr<Order const> order, FVec const & x);

    std::shared_ptr<Order const> const & order() const { return order_; }
    ALattice const & lattice() const { return L_; }
    std::vector<FVec> basis() const { return L_.columns(); }
    bool isIntegral() const { return order_->lattice().contains(L_); }
    bool contains(FVec const & x) const { return L_.contains(x); }
    FracIdeal scaled(FVec const & x) const;
    /// HNF of the ideal in the coordinates of the order's HNF basis.
    ALattice orderCoordinates() const;
    /// Generator of I ∩ A (monic; fractional ideals give a rational function).
    RatFunc intersectionWithA() const;

    friend bool operator==(FracIdeal const & a, FracIdeal const & b) { return a.L_ == b.L_; }
    friend bool operator<(FracIdeal const & a, FracIdeal const & b) { return a.L_ < b.L_; }

    std::string toString() const { return L_.toString(); }

  private:
    std::shared_ptr<Order const> order_;
    ALattice L_;
};

FracIdeal idealMul(FracIdeal const & I, FracIdeal const & J);
/// (I : J) = {x in F~ : xJ ⊆ I}.
FracIdeal idealColon(FracIdeal const & I, FracIdeal const & J);
FracIdeal idealSum(FracIdeal const & I, FracIdeal const & J);
FracIdeal idealIntersect(FracIdeal const & I, FracIdeal const & J);
/// det(I)/det(O) made monic; for integral I this is chi(O/I).
RatFunc idealNorm(FracIdeal const & I);
bool idealEq(FracIdeal const & I, FracIdeal const & J);
/// O_I = (I : I).
std::shared_ptr<Order const> multiplicatorRing(FracIdeal const & I);

enum class LinEquivStatus { Yes, No, Unknown };

struct LinEquivResult {
    LinEquivStatus status = LinEquivStatus::Unknown;
    std::optional<FVec> witness; // I = J * witness
    std::string reason;
};

/// Decides I = J u for some u in F~.  The search space is the finite set of
/// u with tau-degree of (denominator * u) bounded, so the answer is exact
/// unless that degree exceeds `bound`.
LinEquivResult linEquiv(EndRing const & E, FracIdeal const & I, FracIdeal const & J, int bound = 256);
LinEquivResult isPrincipal(EndRing const & E, FracIdeal const & I, int bound = 256);
/// 1 ∈ (I:J)(J:I).
bool weaklyEquivalent(FracIdeal const & I, FracIdeal const & J);

enum class DualForm { Auto, Trace, LastCoordinate };

struct GorensteinReport {
    bool gorenstein = false;
    APoly defect;            // chi(O / O^v (O : O^v)); 1 iff Gorenstein
    bool traceUsed = true;   // false when the trace form was degenerate
    std::vector<APoly> nonGorensteinPrimes;
};

/// Dual lattice {x : lambda(x O) ⊆ A} for the chosen functional.
ALattice dualLattice(Order const & O, DualForm form, bool * traceUsed = nullptr);
GorensteinReport gorensteinReport(Order const & O, DualForm form = DualForm::Auto);
bool isGorenstein(Order const & O, DualForm form = DualForm::Auto);
bool isGorensteinAt(Order const & O, APoly const & ell, DualForm form = DualForm::Auto);

/// Every integral ideal I of O with deg chi(O/I) <= maxNormDeg, ordered by
/// norm degree and then canonically.
std::vector<FracIdeal> enumerateIntegralIdeals(std::shared_ptr<Order const> const & O, int maxNormDeg,
                                               int minNormDeg = 0);

/// Distinct monic irreducible factors of a nonzero polynomial.
std::vector<APoly> primeFactors(APoly const & a);

} // namespace drinfeld
