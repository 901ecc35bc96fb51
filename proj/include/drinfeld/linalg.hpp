#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "drinfeld/field.hpp"

namespace drinfeld {

/// Dense matrix over F_q, row-major.  Every finite-dimensional problem in the
/// library (centralizers, minimal polynomials, annihilators) reduces to
/// Gaussian elimination on one of these.
class FqMatrix {
  public:
    FqMatrix(FqField const & F, std::size_t rows, std::size_t cols);

    FqField const & field() const { return *F_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FqElem & operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    FqElem operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;

    /// Basis of {x : A x = 0}.
    std::vector<std::vector<FqElem>> nullspace() const;

    /// Some x with A x = b, or nullopt.
    std::optional<std::vector<FqElem>> solve(std::vector<FqElem> const & b) const;

  private:
    FqField const * F_;
    std::size_t rows_, cols_;
    std::vector<FqElem> a_;
};

} // namespace drinfeld
