#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/apoly.hpp"

namespace drinfeld {

/// Column vector over F = F_q(T).
using FVec = std::vector<RatFunc>;

FVec zeroVec(FqField const & F, std::size_t s);
FVec unitVec(FqField const & F, std::size_t s, std::size_t i);
FVec operator+(FVec const & a, FVec const & b);
FVec operator-(FVec const & a, FVec const & b);
FVec operator*(RatFunc const & c, FVec const & v);
bool isZero(FVec const & v);
/// Monic least common denominator of the entries.
APoly commonDenominator(FVec const & v);

/// Dense matrix over F, Gaussian elimination only.
class RatMatrix {
  public:
    RatMatrix(FqField const & F, std::size_t rows, std::size_t cols);
    static RatMatrix identity(FqField const & F, std::size_t s);
    static RatMatrix fromColumns(FqField const & F, std::vector<FVec> const & cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FqField const & field() const { return *F_; }
    RatFunc & operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    RatFunc const & operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    FVec column(std::size_t j) const;
    RatMatrix transpose() const;
    friend RatMatrix operator*(RatMatrix const & a, RatMatrix const & b);
    FVec apply(FVec const & v) const;

    RatFunc det() const;
    RatFunc trace() const;
    std::size_t rank() const;
    /// Throws DivisionByZero when singular.
    RatMatrix inverse() const;
    std::optional<FVec> solve(FVec const & b) const;
    /// Basis of the right kernel.
    std::vector<FVec> nullspace() const;

    friend bool operator==(RatMatrix const & a, RatMatrix const & b) { return a.a_ == b.a_; }

  private:
    FqField const * F_;
    std::size_t rows_, cols_;
    std::vector<RatFunc> a_;
};

/// Hermite normal form of the A-span of integral column vectors of length s:
/// upper triangular s x s, monic diagonal, entries to the right of the
/// diagonal reduced modulo the diagonal entry of their row.
/// Throws RankError when the span has rank < s.
std::vector<std::vector<APoly>> hnfColumns(FqField const & F, std::size_t s,
                                           std::vector<std::vector<APoly>> cols);

/// Full-rank A-lattice (1/den) * span(columns of an HNF matrix) in F^s.
class ALattice {
  public:
    ALattice() = default;
    /// Canonical lattice spanned by the given vectors.
    static ALattice fromGenerators(FqField const & F, std::size_t s, std::vector<FVec> const & gens);
    static ALattice identity(FqField const & F, std::size_t s);

    FqField const & field() const { return *F_; }
    std::size_t dim() const { return s_; }
    APoly const & den() const { return den_; }
    /// Integral HNF numerator entry (row i, column j).
    APoly const & entry(std::size_t i, std::size_t j) const { return b_[j][i]; }
    FVec column(std::size_t j) const;
    std::vector<FVec> columns() const;
    RatMatrix basisMatrix() const;
    bool isIntegral() const { return den_.isOne(); }

    /// Coordinates of v in the HNF basis if they are all in A.
    std::optional<std::vector<APoly>> coordinates(FVec const & v) const;
    bool contains(FVec const & v) const { return coordinates(v).has_value(); }
    bool contains(ALattice const & M) const;

    /// Determinant of the basis (a rational function; volume up to F_q^x).
    RatFunc det() const;
    ALattice scaled(RatFunc const & c) const;

    friend bool operator==(ALattice const & a, ALattice const & b)
    {
        return a.den_ == b.den_ && a.b_ == b.b_;
    }
    friend bool operator<(ALattice const & a, ALattice const & b);

    std::string toString(std::string const & var = "T") const;

  private:
    FqField const * F_ = nullptr;
    std::size_t s_ = 0;
    APoly den_;
    std::vector<std::vector<APoly>> b_; // columns
};

ALattice latticeSum(ALattice const & L, ALattice const & M);
ALattice latticeIntersect(ALattice const & L, ALattice const & M);
/// {x : x . y in A for all y in L} for the standard dot product.
ALattice standardDual(ALattice const & L);

/// chi(L/M): monic generator of the index ideal.  Throws NotSublattice when
/// M is not contained in L.
APoly latticeIndex(ALattice const & L, ALattice const & M);

} // namespace drinfeld
